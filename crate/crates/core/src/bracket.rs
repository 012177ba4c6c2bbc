//! The Kauffman bracket as a sum over all `2^n` states.
//!
//! `⟨D⟩ = Σ_s A^{Σ s(i)} δ^{sD} ⟨D_s⟩` where `δ = -A^2 - A^-2`, `sD` counts
//! trivial circles and `⟨D_s⟩` is the shadow sum of the essential circles.
//! States are grouped by the canonical key of their region complex so every
//! distinct complex is evaluated once.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use rayon::prelude::*;

use crate::diagram::Diagram;
use crate::error::Error;
use crate::laurent::{LaurentPoly, Order, RationalFn};
use crate::resolution::{resolve, resolve_unchecked, KauffmanState, RegionComplex};
use crate::shadow::{psi, resolution_bracket, Psi};

pub const DEFAULT_MAX_CROSSINGS: usize = 24;

#[derive(Clone, Debug)]
pub struct BracketConfig {
    /// Worker threads for the state sum; 0 means one per available core.
    pub jobs: usize,
    pub max_crossings: usize,
    /// Keep one record per state in the report.
    pub keep_states: bool,
}

impl Default for BracketConfig {
    fn default() -> Self {
        BracketConfig { jobs: 1, max_crossings: DEFAULT_MAX_CROSSINGS, keep_states: false }
    }
}

/// Shadow sums by canonical complex key, shareable across diagrams.
#[derive(Debug, Default)]
pub struct BracketCache {
    map: RwLock<HashMap<String, RationalFn>>,
}

impl BracketCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `⟨D_s⟩` for a region complex, computed at most once per key.
    pub fn get(&self, key: &str, rc: &RegionComplex) -> RationalFn {
        if let Some(v) = self.map.read().unwrap().get(key) {
            return v.clone();
        }
        let v = resolution_bracket(rc);
        self.map.write().unwrap().entry(key.to_string()).or_insert(v).clone()
    }
}

/// Per-state quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateRecord {
    /// Bit `i` set means crossing `i` is smoothed with sign `-1`.
    pub index: u64,
    /// `Σ s(i)`.
    pub sum: i64,
    /// `sD`.
    pub trivial: usize,
    /// `p(s)`.
    pub essential: usize,
    pub psi: Psi,
    /// `M(s) = ord_∞ ⟨D|s⟩`.
    pub max_degree: Order,
    /// `m(s) = ord_0 ⟨D|s⟩`.
    pub min_degree: Order,
}

/// Summary of the extreme states `s₊` and `s₋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeState {
    pub trivial: usize,
    pub essential: usize,
    pub max_degree: Order,
    pub min_degree: Order,
}

#[derive(Clone, Debug)]
pub struct BracketReport {
    pub bracket: RationalFn,
    pub breadth: i64,
    pub crossings: usize,
    pub genus: usize,
    pub diagram_genus: usize,
    pub plus: ExtremeState,
    pub minus: ExtremeState,
    /// Number of distinct region complexes met.
    pub complexes: usize,
    pub states: Vec<StateRecord>,
}

/// `A^{Σs} δ^{sD}`.
fn weight(sum: i64, trivial: usize) -> LaurentPoly {
    LaurentPoly::delta().pow(trivial as u32).shift(sum)
}

/// `⟨D|s⟩ = A^{Σs} δ^{sD} ⟨D_s⟩`.
pub fn state_term(d: &Diagram, s: &KauffmanState) -> Result<RationalFn, Error> {
    let r = resolve(d, s)?;
    Ok(resolution_bracket(&r.region_complex()).mul_poly(&weight(s.sum(), r.trivial_count)))
}

fn record_degrees(sum: i64, trivial: usize, ds: &RationalFn) -> (Order, Order) {
    match (ds.ord_inf(), ds.ord_zero()) {
        (Order::Finite(hi), Order::Finite(lo)) => {
            let t = 2 * trivial as i64;
            (Order::Finite(sum + t + hi), Order::Finite(sum - t + lo))
        }
        other => other,
    }
}

fn extreme(d: &Diagram, s: &KauffmanState, cache: &BracketCache) -> ExtremeState {
    let r = resolve_unchecked(d, s.signs());
    let rc = r.region_complex();
    let ds = cache.get(&rc.canonical_key(), &rc);
    let (max_degree, min_degree) = record_degrees(s.sum(), r.trivial_count, &ds);
    ExtremeState { trivial: r.trivial_count, essential: r.essential_count, max_degree, min_degree }
}

struct Bucket {
    complex: RegionComplex,
    /// `(Σs, sD) -> number of states`
    counts: BTreeMap<(i64, usize), u64>,
}

struct Chunk {
    buckets: HashMap<String, Bucket>,
    states: Vec<(u64, i64, usize, usize, String)>,
}

fn run_chunk(d: &Diagram, lo: u64, hi: u64, keep: bool) -> Chunk {
    let n = d.crossing_count();
    let mut buckets: HashMap<String, Bucket> = HashMap::new();
    let mut states = Vec::new();
    let mut signs = vec![1i8; n];
    for idx in lo..hi {
        for (i, s) in signs.iter_mut().enumerate() {
            *s = if idx >> i & 1 == 1 { -1 } else { 1 };
        }
        let sum: i64 = signs.iter().map(|&s| s as i64).sum();
        let r = resolve_unchecked(d, &signs);
        let rc = r.region_complex();
        let key = rc.canonical_key();
        if keep {
            states.push((idx, sum, r.trivial_count, r.essential_count, key.clone()));
        }
        let b = buckets.entry(key).or_insert_with(|| Bucket { complex: rc, counts: BTreeMap::new() });
        *b.counts.entry((sum, r.trivial_count)).or_insert(0) += 1;
    }
    Chunk { buckets, states }
}

pub fn kauffman_bracket(d: &Diagram, config: &BracketConfig) -> Result<BracketReport, Error> {
    kauffman_bracket_cached(d, config, &BracketCache::new())
}

pub fn kauffman_bracket_cached(
    d: &Diagram,
    config: &BracketConfig,
    cache: &BracketCache,
) -> Result<BracketReport, Error> {
    let n = d.crossing_count();
    if n > config.max_crossings || n >= 63 {
        return Err(Error::CrossingCap { crossings: n, cap: config.max_crossings.min(62) });
    }
    let total_states = 1u64 << n;
    let jobs = if config.jobs == 0 { rayon::current_num_threads().max(1) } else { config.jobs };
    let chunk_count = if jobs == 1 { 1 } else { (jobs as u64 * 16).min(total_states) };
    let step = total_states.div_ceil(chunk_count);
    let ranges: Vec<(u64, u64)> =
        (0..chunk_count).map(|k| (k * step, ((k + 1) * step).min(total_states))).filter(|(a, b)| a < b).collect();
    let keep = config.keep_states;
    let chunks: Vec<Chunk> = if jobs == 1 {
        ranges.iter().map(|&(a, b)| run_chunk(d, a, b, keep)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| ranges.par_iter().map(|&(a, b)| run_chunk(d, a, b, keep)).collect())
    };

    // merge in chunk order; keys are sorted afterwards so the sum order is fixed
    let mut merged: BTreeMap<String, Bucket> = BTreeMap::new();
    let mut states = Vec::new();
    for ch in chunks {
        for (key, b) in ch.buckets {
            match merged.get_mut(&key) {
                Some(m) => {
                    for (k, c) in b.counts {
                        *m.counts.entry(k).or_insert(0) += c;
                    }
                }
                None => {
                    merged.insert(key, b);
                }
            }
        }
        states.extend(ch.states);
    }

    let evaluate = |(key, b): (&String, &Bucket)| -> (String, RationalFn, LaurentPoly) {
        let ds = cache.get(key, &b.complex);
        let mut w = LaurentPoly::zero();
        for (&(sum, trivial), &count) in &b.counts {
            w = &w + &(&weight(sum, trivial) * &LaurentPoly::monomial(count, 0));
        }
        (key.clone(), ds, w)
    };
    let evaluated: Vec<(String, RationalFn, LaurentPoly)> = if jobs == 1 {
        merged.iter().map(evaluate).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| merged.par_iter().map(evaluate).collect())
    };
    let mut bracket = RationalFn::zero();
    for (_, ds, w) in &evaluated {
        if !ds.is_zero() {
            bracket = &bracket + &ds.mul_poly(w);
        }
    }

    let mut records = Vec::new();
    if keep {
        let by_key: HashMap<&str, (&RationalFn, &RegionComplex)> =
            evaluated.iter().map(|(k, ds, _)| (k.as_str(), (ds, &merged[k].complex))).collect();
        let mut psis: HashMap<&str, Psi> = HashMap::new();
        for (k, (_, rc)) in &by_key {
            psis.insert(k, psi(rc)?);
        }
        for (index, sum, trivial, essential, key) in &states {
            let (ds, _) = by_key[key.as_str()];
            let (max_degree, min_degree) = record_degrees(*sum, *trivial, ds);
            records.push(StateRecord {
                index: *index,
                sum: *sum,
                trivial: *trivial,
                essential: *essential,
                psi: psis[key.as_str()],
                max_degree,
                min_degree,
            });
        }
    }

    Ok(BracketReport {
        breadth: bracket.breadth(),
        bracket,
        crossings: n,
        genus: d.genus(),
        diagram_genus: d.diagram_genus(),
        plus: extreme(d, &KauffmanState::plus(n), cache),
        minus: extreme(d, &KauffmanState::minus(n), cache),
        complexes: merged.len(),
        states: records,
    })
}

/// `B(⟨D⟩)`.
pub fn bracket_breadth(d: &Diagram) -> Result<i64, Error> {
    Ok(kauffman_bracket(d, &BracketConfig::default())?.breadth)
}
