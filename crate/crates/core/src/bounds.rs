//! Upper and lower bounds for `dim lkv^{(W,D)}` and the assembled table.
//!
//! The upper bound is `dim sder^{(W,D)} - rank Δ_Y(genset rows)`, the rank
//! taken mod p after folding. The lower bound is the folded rank of all
//! Lie monomials in the seed elements, bracketed with `[·,·]_Y`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use log::{debug, info};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{bracket_y, delta_y, CyclicPoly, DeltaMode};
use crate::bk::bk_table;
use crate::error::{Error, Result};
use crate::lie::{default_w1, dim_sder, distinct_genset_pairs, iota, lie_bracketing, sigma_bar};
use crate::modmat::{validate_prime, FoldConfig, FoldedMatrix, SparseRow, DEFAULT_PRIME};
use crate::reference;
use crate::scalar::{Coeff, Modulus, Zp};
use crate::words::{enumerate_cyclic_words, is_lyndon_seq, standard_split, CyclicWord, Word};

/// Rows generated and folded per batch.
pub const BATCH_ROWS: usize = 4096;
/// Default number of rows between checkpoint writes.
pub const DEFAULT_CHECKPOINT_ROWS: u64 = 65536;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckpointConfig {
    pub dir: PathBuf,
    pub every_rows: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundConfig {
    pub prime: u64,
    pub seed: u64,
    /// First Lyndon length of the generating pairs; `None` for `floor((W+1)/2)`.
    pub w1: Option<usize>,
    pub delta_mode: DeltaMode,
    pub checkpoint: Option<CheckpointConfig>,
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig { prime: DEFAULT_PRIME, seed: 0, w1: None, delta_mode: DeltaMode::Strip1, checkpoint: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpperReport {
    pub w: usize,
    pub d: usize,
    pub w1: usize,
    pub dim_sder: u128,
    pub rows: u64,
    pub cols: usize,
    pub rank: usize,
    /// `dim sder - rank`, an upper bound for `dim lkv^{(W,D)}`.
    pub lkv: u128,
}

fn column_index(len: usize, ys: usize) -> HashMap<Word, usize> {
    if len == 0 {
        return HashMap::new();
    }
    enumerate_cyclic_words(len, ys).into_iter().enumerate().map(|(i, c)| (c.canonical(), i)).collect()
}

fn to_sparse(p: &CyclicPoly<Zp>, index: &HashMap<Word, usize>) -> Result<SparseRow> {
    let mut row: SparseRow = Vec::with_capacity(p.len());
    for (c, v) in p.terms() {
        let j = *index.get(&c.canonical()).ok_or_else(|| Error::UnexpectedWord(c.to_string()))?;
        row.push((j, v.value()));
    }
    row.sort_unstable();
    Ok(row)
}

fn checkpoint_path(cfg: &CheckpointConfig, w: usize, d: usize, b: &BoundConfig, w1: usize) -> PathBuf {
    cfg.dir.join(format!("upper_w{w}_d{d}_p{}_s{}_w1{w1}_{}.ckpt", b.prime, b.seed, b.delta_mode))
}

/// The upper-bound pipeline with its intermediate sizes.
pub fn upper_bound_report(w: usize, d: usize, cfg: &BoundConfig) -> Result<UpperReport> {
    let m = validate_prime(cfg.prime, w)?;
    let n = dim_sder(w, d)?;
    let w1 = cfg.w1.unwrap_or_else(|| default_w1(w));
    let pairs = distinct_genset_pairs(w, d, w1)?;
    let (len, ys) = match cfg.delta_mode {
        DeltaMode::Strip1 => (w, d),
        DeltaMode::Strip2 => (w.saturating_sub(1), d.saturating_sub(1)),
    };
    let index = if len == 0 || (cfg.delta_mode == DeltaMode::Strip2 && d == 0) { HashMap::new() } else { column_index(len, ys) };
    let n_rows = usize::try_from(n).map_err(|_| Error::Overflow)?;
    let fold_cfg = FoldConfig { n_rows_folded: n_rows, n_cols_logical: index.len(), prime: cfg.prime, rng_seed: cfg.seed };
    let ckpt = cfg.checkpoint.as_ref().map(|c| (c, checkpoint_path(c, w, d, cfg, w1)));
    let mut folded = match &ckpt {
        Some((_, path)) if path.exists() => {
            let f = FoldedMatrix::load_checkpoint(fold_cfg, path)?;
            info!("({w},{d}): resuming from {} at row {}", path.display(), f.rows_ingested());
            f
        }
        _ => FoldedMatrix::new(fold_cfg)?,
    };
    debug!("({w},{d}): dim sder {n}, {} generating rows, {} columns, split {w1}", pairs.len(), index.len());

    if !index.is_empty() && n_rows > 0 {
        let lb: HashMap<Word, crate::algebra::AssocPoly<Zp>> = {
            let mut words: Vec<_> = pairs.iter().flat_map(|(a, b)| [*a, *b]).collect();
            words.sort_by_key(|l| l.word());
            words.dedup();
            words.par_iter().map(|l| (l.word(), lie_bracketing(l, &m))).collect()
        };
        let mut since_save = 0u64;
        let start = folded.rows_ingested() as usize;
        for (chunk_no, chunk) in pairs[start.min(pairs.len())..].chunks(BATCH_ROWS).enumerate() {
            let base = start + chunk_no * BATCH_ROWS;
            let rows: Vec<(u64, SparseRow)> = chunk
                .par_iter()
                .enumerate()
                .map(|(k, (a, b))| {
                    let row = crate::algebra::project_pi(&lb[&a.word()].mul(&lb[&b.word()]))?;
                    Ok(((base + k) as u64, to_sparse(&delta_y(&row, cfg.delta_mode)?, &index)?))
                })
                .collect::<Result<_>>()?;
            folded.ingest_batch(&rows)?;
            since_save += rows.len() as u64;
            if let Some((c, path)) = &ckpt {
                if since_save >= c.every_rows {
                    folded.save_checkpoint(path)?;
                    since_save = 0;
                }
            }
        }
        if let Some((_, path)) = &ckpt {
            folded.save_checkpoint(path)?;
        }
    }
    let rank = folded.into_rank();
    let lkv = n.checked_sub(rank as u128).ok_or_else(|| Error::NegativeDimension { w, d, value: n as i128 - rank as i128 })?;
    Ok(UpperReport { w, d, w1, dim_sder: n, rows: pairs.len() as u64, cols: index.len(), rank, lkv })
}

/// `C̄_{W,D} = dim sder^{(W,D)} - rank(Δ_Y ∘ ι)`, an upper bound for `dim lkv^{(W,D)}`.
pub fn upper_bound(w: usize, d: usize, cfg: &BoundConfig) -> Result<u128> {
    Ok(upper_bound_report(w, d, cfg)?.lkv)
}

/// The hat-lkv dimension from the lkv dimension: depth 1 is spanned by σ̄
/// in odd weight ≥ 3 and vanishes otherwise; higher depths pass through.
pub fn assemble_hat_lkv(w: usize, d: usize, lkv_dim: u128) -> u128 {
    if d == 1 {
        (w >= 3 && w % 2 == 1) as u128
    } else {
        lkv_dim
    }
}

/// A generator of the lower-bound span, given by its ι-image mod p.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeedElement {
    pub name: String,
    pub weight: usize,
    pub depth: usize,
    pub value: CyclicPoly<Zp>,
}

impl SeedElement {
    /// Checks that `value` is homogeneous of the declared weight and depth.
    pub fn validate(&self) -> Result<()> {
        let ok = self.value.terms().all(|(c, _)| c.weight() == self.weight && c.depth() == self.depth as i64);
        if ok && self.weight >= 1 {
            Ok(())
        } else {
            Err(Error::SeedBidegree(format!("{} is not homogeneous of weight {} and depth {}", self.name, self.weight, self.depth)))
        }
    }
}

/// `ι(σ̄_{2k+1})` for every odd weight `3 ≤ 2k+1 ≤ max_weight`.
pub fn sigma_seeds(max_weight: usize, m: Modulus) -> Result<Vec<SeedElement>> {
    (1..)
        .take_while(|k| 2 * k < max_weight)
        .map(|k| {
            Ok(SeedElement { name: format!("sigma{}", 2 * k + 1), weight: 2 * k + 1, depth: 1, value: iota(&sigma_bar(k, &m))? })
        })
        .collect()
}

/// Parses seed records: `name weight depth (coeff word)*`, whitespace
/// separated, one per line; `#` starts a comment. Coefficients are decimal
/// integers reduced mod p.
pub fn parse_seed_file(text: &str, m: Modulus) -> Result<Vec<SeedElement>> {
    let mut seeds = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::SeedParse { line: lineno + 1, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 3 || !(fields.len() - 3).is_multiple_of(2) {
            return Err(err("expected: name weight depth followed by coefficient/word pairs".into()));
        }
        let weight: usize = fields[1].parse().map_err(|_| err(format!("bad weight {:?}", fields[1])))?;
        let depth: usize = fields[2].parse().map_err(|_| err(format!("bad depth {:?}", fields[2])))?;
        let mut value = CyclicPoly::zero();
        for pair in fields[3..].chunks(2) {
            let c = Zp::parse(pair[0], &m).ok_or_else(|| err(format!("bad coefficient {:?}", pair[0])))?;
            let word: CyclicWord = pair[1].parse().map_err(|e| err(format!("bad word {:?}: {e}", pair[1])))?;
            value.add_term(word, c);
        }
        let seed = SeedElement { name: fields[0].to_string(), weight, depth, value };
        seed.validate()?;
        seeds.push(seed);
    }
    Ok(seeds)
}

/// Lyndon words over the seed alphabet (letters ordered by position) of total
/// weight `w` and depth `d`.
pub fn seed_lyndon_words(seeds: &[SeedElement], w: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(seeds: &[SeedElement], w: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w == 0 && d == 0 && !cur.is_empty() {
            if is_lyndon_seq(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for (i, s) in seeds.iter().enumerate() {
            if s.weight <= w && s.depth <= d {
                cur.push(i);
                go(seeds, w - s.weight, d - s.depth, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(seeds, w, d, &mut Vec::new(), &mut out);
    out
}

fn evaluate(word: &[usize], seeds: &[SeedElement], memo: &mut HashMap<Vec<usize>, CyclicPoly<Zp>>) -> CyclicPoly<Zp> {
    if let Some(v) = memo.get(word) {
        return v.clone();
    }
    let value = match standard_split(word) {
        None => seeds[word[0]].value.clone(),
        Some(k) => {
            let left = evaluate(&word[..k], seeds, memo);
            let right = evaluate(&word[k..], seeds, memo);
            bracket_y(&left, &right)
        }
    };
    memo.insert(word.to_vec(), value.clone());
    value
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerReport {
    pub w: usize,
    pub d: usize,
    pub monomials: usize,
    pub rank: usize,
}

/// The lower-bound pipeline; σ̄ seeds up to weight `w` are added ahead of `extra`.
pub fn lower_bound_report(w: usize, d: usize, extra: &[SeedElement], cfg: &BoundConfig) -> Result<LowerReport> {
    let m = validate_prime(cfg.prime, w)?;
    for s in extra {
        s.validate()?;
        if s.value.coeff_ctx().is_some_and(|c| c != m) {
            return Err(Error::SeedBidegree(format!("{} was loaded for a different prime", s.name)));
        }
    }
    let mut seeds = sigma_seeds(w, m)?;
    seeds.extend_from_slice(extra);
    let words = seed_lyndon_words(&seeds, w, d);
    let mut memo = HashMap::new();
    let index = column_index(w + 1, d + 1);
    let mut rows = Vec::with_capacity(words.len());
    for (i, word) in words.iter().enumerate() {
        let v = evaluate(word, &seeds, &mut memo);
        if v.terms().any(|(c, _)| c.weight() != w || c.depth() != d as i64) {
            return Err(Error::InvariantViolation(format!("Lie monomial {word:?} is not homogeneous of ({w},{d})")));
        }
        rows.push((i as u64, to_sparse(&v, &index)?));
    }
    let n = words.len().min(usize::try_from(dim_sder(w, d)?).map_err(|_| Error::Overflow)?);
    let mut folded = FoldedMatrix::new(FoldConfig { n_rows_folded: n, n_cols_logical: index.len(), prime: cfg.prime, rng_seed: cfg.seed })?;
    folded.ingest_batch(&rows)?;
    Ok(LowerReport { w, d, monomials: words.len(), rank: folded.into_rank() })
}

/// `C̲_{W,D}`: the rank of the span of all Lie monomials in the seeds.
pub fn lower_bound(w: usize, d: usize, extra: &[SeedElement], cfg: &BoundConfig) -> Result<u128> {
    Ok(lower_bound_report(w, d, extra, cfg)?.rank as u128)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Matched,
    Gap,
    UpperOnly,
    LowerOnly,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Matched => "matched",
            Status::Gap => "gap",
            Status::UpperOnly => "upper_only",
            Status::LowerOnly => "lower_only",
        })
    }
}

/// One cell of the table. `upper` is the hat-lkv value assembled from
/// `upper_lkv`, so that it is comparable with `lower` and the BK numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub w: usize,
    pub d: usize,
    pub upper: Option<u128>,
    pub upper_lkv: Option<u128>,
    pub lower: Option<u128>,
    pub bk_predicted: Option<u64>,
    pub reference: Option<u64>,
    pub status: Status,
}

fn status(upper: Option<u128>, lower: Option<u128>) -> Status {
    match (upper, lower) {
        (Some(u), Some(l)) if l == u => Status::Matched,
        (Some(_), Some(_)) => Status::Gap,
        (Some(_), None) => Status::UpperOnly,
        _ => Status::LowerOnly,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRequest {
    pub max_weight: usize,
    pub min_weight: usize,
    /// Largest depth per weight; `None` for all depths `1..=W`.
    pub max_depth: Option<usize>,
    pub with_lower: bool,
}

/// All cells `(W, D)` with `min_weight ≤ W ≤ max_weight`, `1 ≤ D ≤ min(W, max_depth)`.
pub fn table_cells(req: &TableRequest) -> Vec<(usize, usize)> {
    (req.min_weight.max(1)..=req.max_weight)
        .flat_map(|w| (1..=req.max_depth.unwrap_or(w).min(w)).map(move |d| (w, d)))
        .collect()
}

/// Computes every requested cell. Cells run concurrently; the result is in
/// `(W, D)` order and independent of scheduling. Fails if a lower bound
/// exceeds the corresponding upper bound.
pub fn run_table(req: &TableRequest, extra: &[SeedElement], cfg: &BoundConfig) -> Result<Vec<BoundResult>> {
    validate_prime(cfg.prime, req.max_weight)?;
    let bk = bk_table(req.max_weight.max(3))?;
    let cells = table_cells(req);
    cells
        .par_iter()
        .map(|&(w, d)| {
            let start = Instant::now();
            let lkv = upper_bound(w, d, cfg)?;
            let upper = assemble_hat_lkv(w, d, lkv);
            let lower = if req.with_lower { Some(lower_bound(w, d, extra, cfg)?) } else { None };
            if let Some(l) = lower {
                if l > upper {
                    return Err(Error::InvariantViolation(format!("lower bound {l} exceeds upper bound {upper} at ({w},{d})")));
                }
            }
            info!("cell ({w},{d}): upper {upper} lower {lower:?} in {:.3}s", start.elapsed().as_secs_f64());
            Ok(BoundResult {
                w,
                d,
                upper: Some(upper),
                upper_lkv: Some(lkv),
                lower,
                bk_predicted: bk.get(&(w, d)).copied(),
                reference: reference::value(w, d),
                status: status(Some(upper), lower),
            })
        })
        .collect()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// CSV with header `W,D,upper,lower,bk,status`.
pub fn results_csv(results: &[BoundResult]) -> String {
    let mut out = String::from("W,D,upper,lower,bk,status\n");
    for r in results {
        let _ = writeln!(out, "{},{},{},{},{},{}", r.w, r.d, opt(r.upper), opt(r.lower), opt(r.bk_predicted), r.status);
    }
    out
}

/// Weight-by-depth grid. A cell shows the upper bound, or `lower<upper`
/// where the bounds differ; trailing zero depths are left blank.
pub fn results_pretty(results: &[BoundResult]) -> String {
    let mut grid: BTreeMap<usize, BTreeMap<usize, String>> = BTreeMap::new();
    let mut max_d = 0;
    for r in results {
        let cell = match (r.lower, r.upper) {
            (Some(l), Some(u)) if l != u => format!("{l}<{u}"),
            (_, Some(u)) => u.to_string(),
            (Some(l), None) => format!("{l}<?"),
            (None, None) => String::new(),
        };
        max_d = max_d.max(r.d);
        grid.entry(r.w).or_default().insert(r.d, cell);
    }
    let width = grid.values().flat_map(|row| row.values()).map(String::len).max().unwrap_or(1).max(3);
    let mut out = format!("{:>4} |", "W\\D");
    for d in 1..=max_d {
        let _ = write!(out, " {d:>width$}");
    }
    out.push('\n');
    out.push_str(&"-".repeat(6 + max_d * (width + 1)));
    out.push('\n');
    for (w, row) in &grid {
        let last = row.iter().rev().find(|(_, v)| v.as_str() != "0").map_or(0, |(d, _)| *d);
        let _ = write!(out, "{w:>4} |");
        for d in 1..=max_d {
            let v = if d <= last { row.get(&d).map(String::as_str).unwrap_or("") } else { "" };
            let _ = write!(out, " {v:>width$}");
        }
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct TableMeta {
    pub prime: u64,
    pub seed: u64,
    pub w1: Option<usize>,
    pub delta_mode: DeltaMode,
    pub max_weight: usize,
    pub max_depth: Option<usize>,
    pub with_lower: bool,
    pub extra_seeds: Vec<String>,
}

pub fn results_json(meta: &TableMeta, results: &[BoundResult]) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        config: &'a TableMeta,
        cells: &'a [BoundResult],
    }
    serde_json::to_string_pretty(&Doc { config: meta, cells: results }).expect("serializable") + "\n"
}

/// Number of distinct rows in the generating family for `(W, D)` at split `w1`.
pub fn generating_vector_count(w: usize, d: usize, w1: usize) -> Result<usize> {
    Ok(distinct_genset_pairs(w, d, w1)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> BoundConfig {
        BoundConfig::default()
    }

    #[test]
    fn upper_examples() {
        assert_eq!(upper_bound(3, 1, &cfg()).unwrap(), 0);
        assert_eq!(upper_bound(8, 2, &cfg()).unwrap(), 1);
        assert_eq!(upper_bound(12, 4, &cfg()).unwrap(), 1);
        assert_eq!(upper_bound(13, 3, &cfg()).unwrap(), 2);
        let bad = BoundConfig { prime: 2, ..cfg() };
        assert!(matches!(upper_bound(3, 1, &bad), Err(Error::InvalidPrime { .. })));
    }

    #[test]
    fn depth_one_vanishes() {
        for w in 2..=12 {
            assert_eq!(upper_bound(w, 1, &cfg()).unwrap(), 0, "W = {w}");
        }
    }

    #[test]
    fn lower_examples() {
        assert_eq!(lower_bound(8, 2, &[], &cfg()).unwrap(), 1);
        assert_eq!(lower_bound(12, 4, &[], &cfg()).unwrap(), 0);
        assert_eq!(lower_bound(6, 2, &[], &cfg()).unwrap(), 0);
        assert_eq!(lower_bound(7, 1, &[], &cfg()).unwrap(), 1);
    }

    #[test]
    fn assembly() {
        assert_eq!(assemble_hat_lkv(3, 1, 0), 1);
        assert_eq!(assemble_hat_lkv(4, 1, 0), 0);
        assert_eq!(assemble_hat_lkv(8, 2, 1), 1);
    }

    #[test]
    fn seed_file_roundtrip() {
        let m = Modulus::new(3323).unwrap();
        let text = "# comment\nsig3 3 1 1 (XXYY) -1 (XYXY)\n\n";
        let seeds = parse_seed_file(text, m).unwrap();
        assert_eq!(seeds.len(), 1);
        assert_eq!(seeds[0].value, sigma_seeds(3, m).unwrap()[0].value);
        assert!(matches!(parse_seed_file("bad 3 2 1 (XXYY)", m), Err(Error::SeedBidegree(_))));
        assert!(matches!(parse_seed_file("bad 3 1 1", m), Err(Error::SeedParse { line: 1, .. })));
        assert!(matches!(parse_seed_file("bad x 1", m), Err(Error::SeedParse { .. })));
    }

    #[test]
    fn external_seeds_join_the_alphabet() {
        let m = Modulus::new(3323).unwrap();
        let sig = sigma_seeds(5, m).unwrap();
        assert!(seed_lyndon_words(&sigma_seeds(12, m).unwrap(), 12, 4).is_empty());
        // [σ̄3, σ̄5]_Y supplied externally is already in the σ̄ span
        let extra = SeedElement { name: "b35".into(), weight: 8, depth: 2, value: bracket_y(&sig[0].value, &sig[1].value) };
        assert_eq!(lower_bound(8, 2, std::slice::from_ref(&extra), &cfg()).unwrap(), 1);
        assert_eq!(lower_bound(11, 3, &[extra], &cfg()).unwrap(), 1);
        let foreign = SeedElement { value: extra_value_mod(7), ..sig[0].clone() };
        assert!(lower_bound(3, 1, &[foreign], &cfg()).is_err());
    }

    fn extra_value_mod(p: u64) -> CyclicPoly<Zp> {
        let m = Modulus::new(p).unwrap();
        CyclicPoly::from_ints(&[(1, "XXYY"), (-1, "XYXY")], &m).unwrap()
    }

    #[test]
    fn table_small() {
        let req = TableRequest { max_weight: 8, min_weight: 3, max_depth: None, with_lower: true };
        let res = run_table(&req, &[], &cfg()).unwrap();
        for r in &res {
            assert_eq!(r.status, Status::Matched, "{r:?}");
            assert_eq!(r.upper.map(|u| u as u64), r.reference, "{r:?}");
            assert_eq!(r.upper.map(|u| u as u64), r.bk_predicted, "{r:?}");
        }
        let csv = results_csv(&res);
        assert!(csv.starts_with("W,D,upper,lower,bk,status\n3,1,1,1,1,matched\n"));
        let pretty = results_pretty(&res);
        assert!(pretty.lines().count() > 6);
    }

    #[test]
    fn generating_vector_counts() {
        assert_eq!(generating_vector_count(3, 1, 2).unwrap(), 1);
        assert_eq!(generating_vector_count(8, 2, 4).unwrap(), crate::lie::genset_pairs(8, 2, 4).unwrap().len());
        let all = crate::lie::genset_pairs(9, 3, 5).unwrap().len();
        let diagonal = crate::lie::dim_f2(5, Some(2)).unwrap() as usize;
        assert_eq!(generating_vector_count(9, 3, 5).unwrap(), (all + diagonal) / 2);
    }

    #[test]
    fn mirrored_pairs_give_equal_rows() {
        for (a, b) in crate::lie::genset_pairs(9, 3, 5).unwrap() {
            assert_eq!(crate::lie::genset_row::<num_rational::BigRational>(&a, &b, &()), crate::lie::genset_row::<num_rational::BigRational>(&b, &a, &()));
        }
    }

    #[test]
    fn checkpointed_run_matches() {
        let dir = tempfile::tempdir().unwrap();
        let ck = BoundConfig { checkpoint: Some(CheckpointConfig { dir: dir.path().to_path_buf(), every_rows: 1 }), ..cfg() };
        let first = upper_bound_report(10, 4, &ck).unwrap();
        assert_eq!(first, upper_bound_report(10, 4, &cfg()).unwrap());
        // resuming from the completed checkpoint ingests nothing new
        assert_eq!(upper_bound_report(10, 4, &ck).unwrap(), first);
    }
}
