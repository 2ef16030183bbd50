//! Oracle-backed consistency checks, run by the `selftest` command.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{
    bracket_full, bracket_x, bracket_y, delta_y, partial, project_pi, sigma_lift, CyclicPoly, DeltaMode,
};
use crate::bounds::{assemble_hat_lkv, upper_bound, BoundConfig};
use crate::error::Result;
use crate::lie::{default_w1, iota, lemma_span_check, sigma_bar};
use crate::modmat::trials::fold_soundness_trials;
use crate::modmat::validate_prime;
use crate::reference;
use crate::scalar::Coeff;
use crate::words::{enumerate_cyclic_words, CyclicWord, Letter, Word};

type Q = BigRational;

#[derive(Clone, Debug, Serialize)]
pub struct SelfTestItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of one reference cell under one Δ mode.
#[derive(Clone, Debug, Serialize)]
pub struct ModeCell {
    pub w: usize,
    pub d: usize,
    pub mode: DeltaMode,
    pub expected: u64,
    pub got: u128,
    pub matched: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfTestReport {
    pub items: Vec<SelfTestItem>,
    pub mode_cells: Vec<ModeCell>,
}

impl SelfTestReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in &self.items {
            out.push_str(&format!("[{}] {}: {}\n", if i.passed { "PASS" } else { "FAIL" }, i.name, i.detail));
        }
        for mode in [DeltaMode::Strip1, DeltaMode::Strip2] {
            let cells: Vec<&ModeCell> = self.mode_cells.iter().filter(|c| c.mode == mode).collect();
            if cells.is_empty() {
                continue;
            }
            let bad: Vec<String> =
                cells.iter().filter(|c| !c.matched).map(|c| format!("({},{}) {}≠{}", c.w, c.d, c.got, c.expected)).collect();
            out.push_str(&format!("{mode}: {}/{} reference cells match", cells.len() - bad.len(), cells.len()));
            if !bad.is_empty() {
                out.push_str(&format!("; mismatches: {}", bad.join(", ")));
            }
            out.push('\n');
        }
        out
    }
}

fn item(name: &str, passed: bool, detail: String) -> SelfTestItem {
    SelfTestItem { name: name.into(), passed, detail }
}

fn random_homogeneous(rng: &mut ChaCha8Rng, len: usize, ys: usize) -> CyclicPoly<Q> {
    let mut p = CyclicPoly::zero();
    for c in enumerate_cyclic_words(len, ys) {
        if rng.random_bool(0.6) {
            p.add_term(c, Q::from_int(rng.random_range(-5..=5), &()));
        }
    }
    p
}

/// `π(Y·∂_Y Σβ) = (#Y)·β` on random homogeneous `β` of weight at most `max_weight`.
pub fn check_y_lift(trials: usize, max_weight: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).all(|_| {
        let len = rng.random_range(1..=max_weight + 1);
        let ys = rng.random_range(1..=len);
        let beta = random_homogeneous(&mut rng, len, ys);
        let lifted = partial(&sigma_lift(&beta), Word::letter(Letter::Y)).expect("letter prefix").left_mul_letter(Letter::Y);
        project_pi(&lifted).expect("nonempty words") == beta.scale(&Q::from_int(ys as i64, &()))
    })
}

/// Antisymmetry and Jacobi for the three brackets on random homogeneous
/// triples of weight at most `max_weight`.
pub fn check_bracket_axioms(trials: usize, max_weight: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let brackets: [fn(&CyclicPoly<Q>, &CyclicPoly<Q>) -> CyclicPoly<Q>; 3] = [bracket_x, bracket_y, bracket_full];
    (0..trials).all(|_| {
        let mut gen = || {
            let len = rng.random_range(2..=max_weight + 1);
            let ys = rng.random_range(1..=len);
            random_homogeneous(&mut rng, len, ys)
        };
        let (a, b, c) = (gen(), gen(), gen());
        brackets.iter().all(|br| {
            let anti = (&br(&a, &b) + &br(&b, &a)).is_zero();
            let jac = &(&br(&a, &br(&b, &c)) + &br(&b, &br(&c, &a))) + &br(&c, &br(&a, &b));
            anti && jac.is_zero()
        })
    })
}

/// `Δ_Y ι σ̄_{2k+1} = (X^{2k} Y)` under the one-letter mode.
pub fn check_sigma_delta(max_k: usize) -> bool {
    (1..=max_k).all(|k| {
        let sp = sigma_bar::<Q>(k, &());
        let target = Word::power(Letter::X, 2 * k).and_then(|w| w.push(Letter::Y).ok_or(crate::Error::Overflow));
        let Ok(target) = target else { return false };
        let expected = CyclicPoly::cyclic(CyclicWord::new(target).expect("nonempty"), &());
        sp.is_special() && iota(&sp).and_then(|c| delta_y(&c, DeltaMode::Strip1)).is_ok_and(|d| d == expected)
    })
}

/// Checks the generating-family span identity for all `W ≤ max_weight`, all
/// depths, at the default split and at `W1 = 1`. Returns the failing cells.
pub fn check_lemma(max_weight: usize) -> Result<Vec<(usize, usize, usize)>> {
    let mut failures = Vec::new();
    for w in 1..=max_weight {
        for d in 0..=w {
            let mut splits = vec![default_w1(w), 1, w];
            splits.dedup();
            for w1 in splits {
                if !lemma_span_check(w, d, w1)? {
                    failures.push((w, d, w1));
                }
            }
        }
    }
    Ok(failures)
}

/// The assembled upper bound against every reference cell up to `max_weight`.
pub fn mode_cells(max_weight: usize, mode: DeltaMode, cfg: &BoundConfig) -> Result<Vec<ModeCell>> {
    use rayon::prelude::*;
    let cfg = BoundConfig { delta_mode: mode, ..cfg.clone() };
    reference::cells(max_weight)
        .par_iter()
        .map(|&((w, d), expected)| {
            let got = assemble_hat_lkv(w, d, upper_bound(w, d, &cfg)?);
            Ok(ModeCell { w, d, mode, expected, got, matched: got == expected as u128 })
        })
        .collect()
}

/// Runs every suite. The configured Δ mode must reproduce the reference
/// table up to `table_weight`; the other mode is reported but not judged.
pub fn run_selftest(cfg: &BoundConfig, table_weight: usize) -> Result<SelfTestReport> {
    validate_prime(cfg.prime, table_weight)?;
    let mut items = Vec::new();

    let lemma = check_lemma(8)?;
    items.push(item("lemma span equality (W <= 8)", lemma.is_empty(), format!("{} failing (W,D,W1) cells {lemma:?}", lemma.len())));

    let axioms = check_bracket_axioms(100, 6, cfg.seed);
    items.push(item("bracket antisymmetry and Jacobi", axioms, "100 random triples, weight <= 6".into()));

    let lift = check_y_lift(500, 10, cfg.seed);
    items.push(item("Y-lift identity", lift, "500 random homogeneous elements, weight <= 10".into()));

    let sigma = check_sigma_delta(4);
    items.push(item("sigma-bar special and Delta_Y image", sigma, "k <= 4".into()));

    let fold = fold_soundness_trials(200, cfg.prime, cfg.seed)?;
    items.push(item(
        "fold monotonicity",
        fold.exceeded == 0 && fold.equal_fraction() >= 0.95,
        format!("{} trials, {} exceeded, {:.1}% equal", fold.trials, fold.exceeded, 100.0 * fold.equal_fraction()),
    ));

    let mut cells = Vec::new();
    for mode in [DeltaMode::Strip1, DeltaMode::Strip2] {
        let mc = mode_cells(table_weight, mode, cfg)?;
        if mode == cfg.delta_mode {
            let bad = mc.iter().filter(|c| !c.matched).count();
            items.push(item(
                &format!("reference table under {mode} (W <= {table_weight})"),
                bad == 0,
                format!("{} of {} cells match", mc.len() - bad, mc.len()),
            ));
        }
        cells.extend(mc);
    }
    Ok(SelfTestReport { items, mode_cells: cells })
}
