//! The cross-validation suite behind `fbbgraph verify`.

use std::time::Instant;

use num_bigint::BigUint;

use crate::correspondence::verify_equivalence;
use crate::counting::{binomial, count_d_oracle, CountKind, CountTable};
use crate::error::Result;
use crate::fbb::{build_cf, build_fbb, is_basic_block_universal, is_fundamental_basic_block};
use crate::graphs::{check_bounds, enumerate_count, DEFAULT_ENUMERATION_CAP};
use crate::labeling::{pair_count, rank, unrank, EdgeLabel, RankSet};
use crate::render::{CheckDoc, CheckStatus, ReportDoc};

/// Signature of the pair-to-label map under test.
pub type RankFn = fn(u32, u32, u32) -> Result<EdgeLabel>;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest `n` for structure and recurrence checks.
    pub max_n: u32,
    /// Largest `n` for exhaustive subset enumeration.
    pub enum_cap: u32,
    /// Largest `n` for the per-graph lattice round trips.
    pub block_cap: u32,
    /// Largest `n` for label round trips.
    pub label_max_n: u32,
    pub rank_fn: RankFn,
}

impl SuiteConfig {
    pub fn new(max_n: u32) -> Self {
        SuiteConfig {
            max_n,
            enum_cap: DEFAULT_ENUMERATION_CAP,
            block_cap: 6,
            label_max_n: 50,
            rank_fn: rank,
        }
    }
}

fn check(name: &str, outcome: std::result::Result<String, String>) -> CheckDoc {
    let (status, detail) = match outcome {
        Ok(d) => (CheckStatus::Pass, d),
        Err(d) => (CheckStatus::Fail, d),
    };
    CheckDoc {
        name: name.to_string(),
        status,
        detail,
    }
}

fn label_round_trips(cfg: &SuiteConfig) -> std::result::Result<String, String> {
    let top = cfg.label_max_n.max(cfg.max_n);
    let mut checked = 0u64;
    for n in 2..=top {
        for k in 1..=pair_count(n) {
            let (i, j) = unrank(n, k).map_err(|e| format!("unrank({n}, {k}): {e}"))?;
            let back = (cfg.rank_fn)(n, i, j).map_err(|e| format!("rank({n}, {i}, {j}): {e}"))?;
            if back.get() as u64 != k {
                return Err(format!(
                    "round trip failed: unrank({n}, {k}) = ({i}, {j}) but rank({n}, {i}, {j}) = {}",
                    back.get()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("n = 2..={top}, {checked} labels"))
}

fn cf_structure(cfg: &SuiteConfig) -> std::result::Result<String, String> {
    for n in 2..=cfg.max_n {
        let cf = build_cf(n).map_err(|e| format!("build_cf({n}): {e}"))?;
        let p = cf.poset();
        let big_n = pair_count(n) as usize;
        let n_us = n as usize;
        let expect = [
            ("elements", p.len(), 2 * n_us - 1 + big_n),
            ("covers", p.cover_count(), 2 * n_us - 2 + 2 * big_n),
            ("nullity", p.nullity(), big_n),
        ];
        for (what, got, want) in expect {
            if got != want {
                return Err(format!("CF({n}) has {got} {what}, expected {want}"));
            }
        }
        if !p.is_lattice() {
            return Err(format!("CF({n}) is not a lattice"));
        }
        if !matches!(p.is_rc_lattice(), Ok(true)) {
            return Err(format!("CF({n}) is not an RC-lattice"));
        }
        if !matches!(p.is_dismantlable(), Ok(true)) {
            return Err(format!("CF({n}) is not dismantlable"));
        }
        if !is_basic_block_universal(p) {
            return Err(format!("CF({n}) is not a basic block"));
        }
        if !is_fundamental_basic_block(p) {
            return Err(format!("CF({n}) is not a fundamental basic block"));
        }
    }
    Ok(format!("CF(2)..CF({})", cfg.max_n))
}

fn removal_route(cfg: &SuiteConfig) -> std::result::Result<String, String> {
    let top = cfg.max_n.min(cfg.block_cap);
    let mut checked = 0;
    for n in 3..=top {
        let cf = build_cf(n).map_err(|e| e.to_string())?;
        for k in 1..=pair_count(n) {
            let removed = RankSet::from_labels(n, [k]).map_err(|e| e.to_string())?;
            let via_removal = cf.remove_ranks(&removed).map_err(|e| e.to_string())?;
            let direct =
                build_fbb(n, &removed.complement()).map_err(|e| format!("n={n} k={k}: {e}"))?;
            if !via_removal.same_structure(direct.poset()) {
                return Err(format!("CF({n}) minus c{k} differs from the direct block"));
            }
            if direct.nullity() as u64 != pair_count(n) - 1 || !direct.is_fundamental() {
                return Err(format!("CF({n}) minus c{k} is not a block of nullity N-1"));
            }
            checked += 1;
        }
    }
    Ok(format!("n = 3..={top}, {checked} single removals"))
}

fn phi_round_trips(cfg: &SuiteConfig) -> std::result::Result<String, String> {
    let top = cfg.max_n.min(cfg.enum_cap).min(cfg.block_cap);
    let mut graphs = 0u64;
    for n in 2..=top {
        for l in 0..=pair_count(n) {
            let report = verify_equivalence(n, l, cfg.enum_cap).map_err(|e| e.to_string())?;
            if let Some(first) = report.mismatches.first() {
                return Err(format!("n={n} l={l}: {first}"));
            }
            graphs += report.passed;
        }
    }
    Ok(format!(
        "n = 2..={top}, {graphs} graphs mapped to blocks and back"
    ))
}

fn triple_counts(cfg: &SuiteConfig) -> std::result::Result<String, String> {
    let d = CountTable::build(CountKind::D, cfg.max_n);
    let f = CountTable::build(CountKind::F, cfg.max_n);
    let enum_top = cfg.max_n.min(cfg.enum_cap);
    for n in 0..=cfg.max_n {
        for q in 0..=pair_count(n) {
            let (dv, fv, ov) = (d.get(n, q), f.get(n, q), count_d_oracle(n, q));
            if dv != ov {
                return Err(format!(
                    "d({n},{q}): recurrence {dv}, inclusion-exclusion {ov}"
                ));
            }
            if n >= 2 && fv != dv {
                return Err(format!("f({n},{q}) = {fv} but d({n},{q}) = {dv}"));
            }
            if n >= 2 && n <= enum_top {
                let listed = enumerate_count(n, q, cfg.enum_cap).map_err(|e| e.to_string())?;
                if BigUint::from(listed) != dv {
                    return Err(format!("d({n},{q}) = {dv} but enumeration found {listed}"));
                }
            }
        }
    }
    Ok(format!(
        "recurrences and oracle for n <= {}, enumeration for 2 <= n <= {enum_top}",
        cfg.max_n
    ))
}

fn closed_form_and_band(cfg: &SuiteConfig) -> std::result::Result<String, String> {
    let f = CountTable::build(CountKind::F, cfg.max_n);
    for n in 2..=cfg.max_n {
        let big_n = pair_count(n);
        for l in 0..=big_n {
            let value = f.get(n, l);
            if l + n as u64 >= big_n + 2 && value != binomial(big_n, l) {
                return Err(format!("f({n},{l}) = {value}, expected C({big_n},{l})"));
            }
            if !check_bounds(n, l) && value != BigUint::from(0u32) {
                return Err(format!("f({n},{l}) = {value} outside the nullity band"));
            }
            if check_bounds(n, l) && value == BigUint::from(0u32) {
                return Err(format!("f({n},{l}) = 0 inside the nullity band"));
            }
        }
    }
    Ok(format!("n = 2..={}", cfg.max_n))
}

/// Runs every check; each one reports its first counterexample.
pub fn run_suite(cfg: &SuiteConfig) -> ReportDoc {
    type Check = fn(&SuiteConfig) -> std::result::Result<String, String>;
    let checks: [(&str, Check); 6] = [
        ("edge-label round trips", label_round_trips),
        ("CF(n) structure", cf_structure),
        ("single removals from CF(n)", removal_route),
        ("phi round trips", phi_round_trips),
        ("triple-count agreement", triple_counts),
        ("closed form and nullity band", closed_form_and_band),
    ];
    let mut report = ReportDoc::default();
    for (name, run) in checks {
        let start = Instant::now();
        let mut doc = check(name, run(cfg));
        if doc.status == CheckStatus::Pass {
            doc.detail = format!("{} ({:.2}s)", doc.detail, start.elapsed().as_secs_f64());
        }
        report.checks.push(doc);
    }
    report
}

pub fn all_passed(report: &ReportDoc) -> bool {
    report.checks.iter().all(|c| c.status == CheckStatus::Pass)
}
