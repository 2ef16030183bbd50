//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lkv_core::algebra::DeltaMode;
use lkv_core::bk::bk_table;
use lkv_core::bounds::{generating_vector_count, run_table, upper_bound_report, BoundConfig, Status, TableRequest};
use lkv_core::lie::{default_w1, dim_f2, dim_sder, lemma_span_check};
use lkv_core::modmat::trials::{fold_dense, fold_soundness_trials, random_low_rank_matrix};
use lkv_core::reference;
use lkv_core::selftest::{check_bracket_axioms, check_sigma_delta, check_y_lift, mode_cells};
use lkv_core::words::lyndon_words;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRIME: u64 = 3323;
const SEED: u64 = 0;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn cfg(mode: DeltaMode) -> BoundConfig {
    BoundConfig { prime: PRIME, seed: SEED, delta_mode: mode, ..BoundConfig::default() }
}

fn bk_predictor() -> Outcome {
    let start = Instant::now();
    let table = match bk_table(30) {
        Ok(t) => t,
        Err(e) => return outcome(false, format!("bk_table failed: {e}")),
    };
    let elapsed = start.elapsed();
    let cells = reference::cells(30);
    let bad: Vec<String> = cells
        .iter()
        .filter(|(k, v)| table.get(k) != Some(v))
        .map(|((w, d), v)| format!("({w},{d}) {:?}≠{v}", table.get(&(*w, *d))))
        .collect();
    let named = [((3, 1), 1), ((8, 2), 1), ((12, 4), 1), ((29, 3), 14), ((29, 9), 7), ((30, 6), 73)];
    let named_ok = named.iter().all(|(k, v)| table.get(k) == Some(v));
    outcome(
        bad.is_empty() && named_ok && elapsed < Duration::from_secs(10),
        format!("{} reference cells, {} mismatches {bad:?}, named cells ok: {named_ok}, {}", cells.len(), bad.len(), secs(elapsed)),
    )
}

fn dimension_formulas() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for w in 1..=14 {
        if dim_f2(w, None).ok() != Some(lyndon_words(w, None).len() as u128) {
            bad.push(format!("({w},*)"));
        }
        for d in 0..=w {
            if dim_f2(w, Some(d)).ok() != Some(lyndon_words(w, Some(d)).len() as u128) {
                bad.push(format!("({w},{d})"));
            }
        }
    }
    let sder = dim_sder(29, 11).ok();
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && sder == Some(99591) && elapsed < Duration::from_secs(5),
        format!("f2 mismatches {bad:?}, sder(29,11) = {sder:?}, {}", secs(elapsed)),
    )
}

fn upper_pipeline(mode: DeltaMode) -> (Outcome, Vec<String>) {
    let start = Instant::now();
    let cells = match mode_cells(14, mode, &cfg(mode)) {
        Ok(c) => c,
        Err(e) => return (outcome(false, format!("upper bound failed: {e}")), Vec::new()),
    };
    let bad: Vec<String> =
        cells.iter().filter(|c| !c.matched).map(|c| format!("({},{}) {}≠{}", c.w, c.d, c.got, c.expected)).collect();
    let depth_one = (2..=14).all(|w| upper_bound_report(w, 1, &cfg(mode)).is_ok_and(|r| r.lkv == 0));
    let o = outcome(
        bad.is_empty() && depth_one && cells.len() == (1..=14).sum::<usize>(),
        format!(
            "{mode}: {}/{} cells match, lkv(W,1) = 0 for W <= 14: {depth_one}, {}",
            cells.len() - bad.len(),
            cells.len(),
            secs(start.elapsed())
        ),
    );
    (o, bad)
}

fn lower_pipeline() -> Outcome {
    let start = Instant::now();
    let req = TableRequest { max_weight: 12, min_weight: 1, max_depth: None, with_lower: true };
    let results = match run_table(&req, &[], &cfg(DeltaMode::Strip1)) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("run_table failed: {e}")),
    };
    let unmatched: Vec<(usize, usize)> =
        results.iter().filter(|r| r.w <= 11 && r.status != Status::Matched).map(|r| (r.w, r.d)).collect();
    let c = results.iter().find(|r| (r.w, r.d) == (12, 4));
    let gap = c.is_some_and(|c| c.lower == Some(0) && c.upper == Some(1) && c.status == Status::Gap);
    outcome(
        unmatched.is_empty() && gap,
        format!("W <= 11 unmatched {unmatched:?}, (12,4) lower 0 and gap: {gap}, {}", secs(start.elapsed())),
    )
}

fn lemma_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut single_split = Vec::new();
    for w in 1..=8 {
        for d in 0..=w {
            for w1 in 1..=w {
                checked += 1;
                match lemma_span_check(w, d, w1) {
                    Ok(true) => {}
                    _ => failures.push((w, d, w1)),
                }
            }
            if w < 2 {
                single_split.push((w, d));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} (W,D,W1) checks, every split 1..=W; failures {failures:?}; cells with one split only {single_split:?}, {}",
            secs(start.elapsed())
        ),
    )
}

fn operator_identities() -> Outcome {
    let start = Instant::now();
    let lift = check_y_lift(500, 10, SEED);
    let axioms = check_bracket_axioms(100, 6, SEED);
    let sigma = check_sigma_delta(4);
    outcome(
        lift && axioms && sigma,
        format!("Y-lift x500: {lift}, bracket axioms x100: {axioms}, sigma-bar k <= 4: {sigma}, {}", secs(start.elapsed())),
    )
}

fn fold_soundness() -> Outcome {
    let start = Instant::now();
    let summary = match fold_soundness_trials(200, PRIME, SEED) {
        Ok(s) => s,
        Err(e) => return outcome(false, format!("trials failed: {e}")),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let matrix = random_low_rank_matrix(&mut rng, 40, 60);
    let req = TableRequest { max_weight: 10, min_weight: 1, max_depth: None, with_lower: true };
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
        pool.install(|| {
            let f = fold_dense(&matrix, 12, PRIME, SEED).expect("fold");
            let table = run_table(&req, &[], &cfg(DeltaMode::Strip1)).expect("table");
            (f.data().to_vec(), f.rank_mod_p(), table)
        })
    };
    let max = std::thread::available_parallelism().map_or(1, |n| n.get());
    let one = run(1);
    let deterministic = [2, 4, max].into_iter().all(|t| run(t) == one);
    outcome(
        summary.exceeded == 0 && summary.equal_fraction() >= 0.95 && deterministic,
        format!(
            "{} trials, {} exceeded, {:.1}% equal; bit-exact at 1/2/4/{max} threads: {deterministic}, {}",
            summary.trials,
            summary.exceeded,
            100.0 * summary.equal_fraction(),
            secs(start.elapsed())
        ),
    )
}

fn main() -> ExitCode {
    let mut all = true;
    let mut report = |n: usize, name: &str, o: Outcome| {
        all &= o.passed;
        println!("criterion {n} [{}] {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    };

    report(1, "BK predictor", bk_predictor());
    report(2, "dimension formulas", dimension_formulas());
    let (strip1, _) = upper_pipeline(DeltaMode::Strip1);
    let strip1_passed = strip1.passed;
    report(3, "upper bound W <= 14", strip1);
    report(4, "lower bound", lower_pipeline());
    report(5, "generating family vs special derivations", lemma_oracle());
    report(6, "operator identities", operator_identities());
    report(7, "fold soundness", fold_soundness());

    let (strip2, strip2_bad) = upper_pipeline(DeltaMode::Strip2);
    report(
        8,
        "delta mode adjudication",
        outcome(
            strip1_passed,
            format!("strip1 reproduces the table; {}; strip2 mismatches {strip2_bad:?}", strip2.detail),
        ),
    );

    let w1 = default_w1(29);
    match generating_vector_count(29, 11, w1) {
        Ok(n) => println!("note: (29,11) generating family at W1 = {w1} has {n} vectors (published count 191931)"),
        Err(e) => println!("note: (29,11) generating family count failed: {e}"),
    }

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
