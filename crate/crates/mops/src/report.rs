//! Verification campaigns: run selected checks over a corpus of instances
//! and produce a machine-readable report with per-instance pass flags.

use crate::construct::{
    find_partition_diagonal, isolate_theorem1, isolate_theorem2, theorem1_bound, theorem2_bound,
};
use crate::gen::{build_family, enumerate_mops, random_mop, FamilySpec, Seed};
use crate::io::read_instances;
use crate::mop::Mop;
use crate::solve::{
    default_size_cap, dominating_by_coloring, gamma_exact, iota_exact, is_dominating_set,
    three_color,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

/// Exact solving is skipped above this order for enumerated, random, and
/// file-sourced instances; subset search grows combinatorially.
pub const DEFAULT_EXACT_MAX_ORDER: usize = 20;
/// Family instances get a higher allowance: their known values are the point.
pub const FAMILY_EXACT_MAX_ORDER: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CampaignSource {
    Enumerate { min_n: usize, max_n: usize },
    Random { n: usize, count: usize, seed: u64 },
    Families { specs: Vec<FamilySpec> },
    File { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Lemmas,
    Theorem1,
    Theorem2,
    KnownBounds,
    ExtremalValues,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::Lemmas,
        CheckKind::Theorem1,
        CheckKind::Theorem2,
        CheckKind::KnownBounds,
        CheckKind::ExtremalValues,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub source: CampaignSource,
    pub checks: Vec<CheckKind>,
    pub exact: bool,
    /// Order limit for exact solving on non-family instances.
    pub exact_max_order: usize,
    /// Override for the subset-search cardinality cap.
    pub size_cap: Option<usize>,
    pub single_thread: bool,
}

impl CampaignConfig {
    pub fn new(source: CampaignSource) -> Self {
        CampaignConfig {
            source,
            checks: CheckKind::ALL.to_vec(),
            exact: false,
            exact_max_order: DEFAULT_EXACT_MAX_ORDER,
            size_cap: None,
            single_thread: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("unsupported instance source: {0}")]
    BadSource(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Gen(#[from] crate::gen::GenError),
}

/// Per-instance record: parameters, solved and constructed values, the
/// applicable bounds, and one pass flag per executed check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub id: String,
    pub n: usize,
    pub n2: usize,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    pub iota1_exact: Option<usize>,
    pub iota0_exact: Option<usize>,
    pub gamma_exact: Option<usize>,
    pub theorem1_size: Option<usize>,
    pub theorem2_size: Option<usize>,
    pub bound_theorem1: Option<usize>,
    pub bound_theorem2: Option<usize>,
    pub bound_theorem2_rule: Option<String>,
    pub bound_gamma: usize,
    pub bound_iota0: Option<usize>,
    pub checks: BTreeMap<String, bool>,
    pub elapsed_ms: f64,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub instances: usize,
    pub failures: usize,
    pub failed_ids: Vec<String>,
    pub read_errors: Vec<String>,
    pub checks_run: Vec<String>,
    pub worst_theorem1_ratio: Option<f64>,
    pub worst_theorem2_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub config: CampaignConfig,
    pub instances: Vec<InstanceReport>,
    pub summary: CampaignSummary,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.summary.failures == 0
    }
}

/// Runs the configured checks over every instance from the source.
/// Deterministic given the config, up to the per-instance timing fields.
pub fn verify_corpus(cfg: &CampaignConfig) -> Result<BoundReport, CampaignError> {
    let mut items: Vec<(String, Mop, Option<FamilySpec>)> = Vec::new();
    let mut read_errors: Vec<String> = Vec::new();
    match &cfg.source {
        CampaignSource::Enumerate { min_n, max_n } => {
            if min_n < &3 || max_n < min_n {
                return Err(CampaignError::BadSource(format!(
                    "enumerate range {min_n}..{max_n}"
                )));
            }
            for n in *min_n..=*max_n {
                for (idx, m) in enumerate_mops(n)?.enumerate() {
                    items.push((format!("enum-{n}-{idx}"), m, None));
                }
            }
        }
        CampaignSource::Random { n, count, seed } => {
            for i in 0..*count {
                let m = random_mop(*n, Seed(seed.wrapping_add(i as u64)))?;
                items.push((format!("rand-{n}-{seed}-{i}"), m, None));
            }
        }
        CampaignSource::Families { specs } => {
            for spec in specs {
                let m = build_family(spec)?;
                items.push((format!("family-{}-{}", spec.name, spec.param), m, Some(*spec)));
            }
        }
        CampaignSource::File { path } => {
            for entry in read_instances(path)? {
                match entry {
                    Ok(m) => {
                        let id = format!("file-{}", items.len() + read_errors.len() + 1);
                        items.push((id, m, None));
                    }
                    Err(e) => read_errors.push(e.to_string()),
                }
            }
        }
    }

    let run = |(id, m, family): &(String, Mop, Option<FamilySpec>)| {
        evaluate_instance(id.clone(), m, *family, cfg)
    };
    let instances: Vec<InstanceReport> = if cfg.single_thread {
        items.iter().map(run).collect()
    } else {
        items.par_iter().map(run).collect()
    };

    let failed_ids: Vec<String> =
        instances.iter().filter(|r| !r.passed()).map(|r| r.id.clone()).collect();
    let mut checks_run: Vec<String> =
        instances.iter().flat_map(|r| r.checks.keys().cloned()).collect();
    checks_run.sort_unstable();
    checks_run.dedup();
    let ratio = |size: Option<usize>, bound: Option<usize>| -> Option<f64> {
        match (size, bound) {
            (Some(s), Some(b)) if b > 0 => Some(s as f64 / b as f64),
            _ => None,
        }
    };
    let worst = |f: &dyn Fn(&InstanceReport) -> Option<f64>| -> Option<f64> {
        instances.iter().filter_map(f).fold(None, |acc, x| {
            Some(match acc {
                None => x,
                Some(a) => a.max(x),
            })
        })
    };
    let summary = CampaignSummary {
        instances: instances.len(),
        failures: failed_ids.len() + read_errors.len(),
        failed_ids,
        read_errors,
        checks_run,
        worst_theorem1_ratio: worst(&|r| ratio(r.theorem1_size, r.bound_theorem1)),
        worst_theorem2_ratio: worst(&|r| ratio(r.theorem2_size, r.bound_theorem2)),
    };
    Ok(BoundReport { config: cfg.clone(), instances, summary })
}

fn has(cfg: &CampaignConfig, kind: CheckKind) -> bool {
    cfg.checks.contains(&kind)
}

fn evaluate_instance(
    id: String,
    m: &Mop,
    family: Option<FamilySpec>,
    cfg: &CampaignConfig,
) -> InstanceReport {
    let start = Instant::now();
    let n = m.n();
    let n2 = m.degree_two_vertices().len();
    let cap = cfg.size_cap.unwrap_or_else(|| default_size_cap(n));
    let exact_limit =
        if family.is_some() { FAMILY_EXACT_MAX_ORDER } else { cfg.exact_max_order };
    let exact_on = cfg.exact && n <= exact_limit;

    let mut checks: BTreeMap<String, bool> = BTreeMap::new();
    let flag = |checks: &mut BTreeMap<String, bool>, name: &str, ok: bool| {
        checks.insert(name.to_string(), ok);
    };

    let theorems_apply = n >= 5;
    let need_iota1 = exact_on
        && ((theorems_apply && (has(cfg, CheckKind::Theorem1) || has(cfg, CheckKind::Theorem2)))
            || has(cfg, CheckKind::KnownBounds)
            || (has(cfg, CheckKind::ExtremalValues)
                && family.is_some_and(|f| f.expected_iota1().is_some())));
    let iota1_exact = if need_iota1 { iota_exact(m, 1, cap).map(|s| s.size()) } else { None };
    let (iota0_exact, gamma_exact_val) = if exact_on && has(cfg, CheckKind::KnownBounds) {
        (iota_exact(m, 0, cap).map(|s| s.size()), gamma_exact(m, cap).map(|s| s.len()))
    } else {
        (None, None)
    };

    if has(cfg, CheckKind::Lemmas) {
        if n >= 4 {
            let deg2 = m.degree_two_vertices();
            let independent = deg2
                .iter()
                .enumerate()
                .all(|(i, &u)| deg2[i + 1..].iter().all(|&v| !m.is_edge(u, v)));
            flag(&mut checks, "lemma-deg2-independent", independent);
            flag(&mut checks, "lemma-deg2-range", 2 <= n2 && 2 * n2 <= n);
            let contraction_ok = m.hamiltonian_edges().all(|e| {
                m.contract_hamiltonian_edge(e)
                    .map(|(c, _)| c.n() == n - 1 && c.validate().is_ok())
                    .unwrap_or(false)
            });
            flag(&mut checks, "lemma-contraction-valid", contraction_ok);
        }
        flag(&mut checks, "lemma-partition-identities", partition_identities_hold(m));
        if n >= 8 {
            flag(&mut checks, "lemma-window-4-6", find_partition_diagonal(m, 4, 6).is_ok());
        }
        if n >= 10 {
            flag(&mut checks, "lemma-window-5-8", find_partition_diagonal(m, 5, 8).is_ok());
        }
        if (5..=9).contains(&n) {
            flag(&mut checks, "lemma-small-iota1", iota_exact(m, 1, 1).is_some());
        }
    }

    let mut theorem1_size = None;
    if has(cfg, CheckKind::Theorem1) && theorems_apply {
        let (set, _) = isolate_theorem1(m);
        theorem1_size = Some(set.size());
        flag(&mut checks, "theorem1-valid", set.verify(m).unwrap_or(false));
        flag(&mut checks, "theorem1-bound", set.size() <= theorem1_bound(n));
        if exact_on {
            flag(
                &mut checks,
                "theorem1-iota1-bound",
                iota1_exact.is_some_and(|i| i <= theorem1_bound(n)),
            );
            flag(
                &mut checks,
                "theorem1-not-below-exact",
                iota1_exact.is_some_and(|i| set.size() >= i),
            );
        }
    }

    let mut theorem2_size = None;
    if has(cfg, CheckKind::Theorem2) && theorems_apply {
        let (set, _) = isolate_theorem2(m);
        theorem2_size = Some(set.size());
        flag(&mut checks, "theorem2-valid", set.verify(m).unwrap_or(false));
        flag(&mut checks, "theorem2-bound", set.size() <= theorem2_bound(n, n2));
        if exact_on {
            flag(
                &mut checks,
                "theorem2-iota1-bound",
                iota1_exact.is_some_and(|i| i <= theorem2_bound(n, n2)),
            );
            flag(
                &mut checks,
                "theorem2-not-below-exact",
                iota1_exact.is_some_and(|i| set.size() >= i),
            );
        }
    }

    if has(cfg, CheckKind::KnownBounds) {
        flag(&mut checks, "coloring-proper", three_color(m).is_proper(m));
        let dom = dominating_by_coloring(m);
        flag(&mut checks, "coloring-dominates", is_dominating_set(m, &dom).unwrap_or(false));
        flag(&mut checks, "coloring-bound", dom.len() <= n / 3);
        if exact_on {
            flag(&mut checks, "gamma-bound", gamma_exact_val.is_some_and(|g| g <= n / 3));
            if n >= 4 {
                flag(&mut checks, "iota0-bound", iota0_exact.is_some_and(|i| i <= n / 4));
            }
            let chain = match (iota1_exact, iota0_exact, gamma_exact_val) {
                (Some(i1), Some(i0), Some(g)) => i1 <= i0 && i0 <= g,
                _ => false,
            };
            flag(&mut checks, "solver-chain", chain);
        }
    }

    if has(cfg, CheckKind::ExtremalValues) {
        if let Some(spec) = family {
            flag(&mut checks, "family-order", n == spec.order());
            flag(&mut checks, "family-deg2", n2 == spec.degree_two_count());
            if exact_on {
                if let Some(expected) = spec.expected_iota1() {
                    flag(&mut checks, "family-iota1", iota1_exact == Some(expected));
                }
            }
        }
    }

    InstanceReport {
        id,
        n,
        n2,
        family,
        iota1_exact,
        iota0_exact,
        gamma_exact: gamma_exact_val,
        theorem1_size,
        theorem2_size,
        bound_theorem1: theorems_apply.then(|| theorem1_bound(n)),
        bound_theorem2: theorems_apply.then(|| theorem2_bound(n, n2)),
        bound_theorem2_rule: theorems_apply.then(|| {
            if 3 * n2 > n { "(n-n2)/3".to_string() } else { "(n+n2)/6".to_string() }
        }),
        bound_gamma: n / 3,
        bound_iota0: (n >= 4).then_some(n / 4),
        checks,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Every diagonal must cut the instance into two valid parts that overlap in
/// exactly that diagonal and jointly reproduce the edge set.
fn partition_identities_hold(m: &Mop) -> bool {
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut parent: Vec<(usize, usize)> = m.edges().collect();
    parent.sort_unstable();
    m.diagonals().iter().all(|&d| {
        let Ok(p) = m.diagonal_partition(d) else { return false };
        if p.inner.n() + p.outer.n() != m.n() + 2 {
            return false;
        }
        if p.inner_hamiltonian_edges != p.inner.n() - 1 {
            return false;
        }
        if p.inner.validate().is_err() || p.outer.validate().is_err() {
            return false;
        }
        let inner: Vec<(usize, usize)> =
            p.inner.edges().map(|(x, y)| norm(p.inner_map[x], p.inner_map[y])).collect();
        let outer: Vec<(usize, usize)> =
            p.outer.edges().map(|(x, y)| norm(p.outer_map[x], p.outer_map[y])).collect();
        let mut union = inner.clone();
        union.extend(outer.iter().copied());
        union.sort_unstable();
        union.dedup();
        let mut overlap: Vec<(usize, usize)> =
            inner.iter().filter(|e| outer.contains(e)).copied().collect();
        overlap.sort_unstable();
        union == parent && overlap == vec![d]
    })
}
