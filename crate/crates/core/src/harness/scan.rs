//! Exhaustive and seeded random scans of a registry entry over a search space.
//!
//! Aggregation is order-independent: counts are sums and retained samples are
//! the lowest candidate indices, so a record does not depend on the number of
//! worker threads.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::registry::{evaluate, EvalOptions, Subject, TheoremId, VerdictStatus};
use crate::digraph::{BipartiteDigraph, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::families::{fixed_cycle_free_bits, fixed_cycle_mask};
use crate::format::to_arc_list;
use crate::solvers::SolveBudget;

/// Largest mask width enumerated exhaustively.
pub const MAX_ENUMERATION_BITS: usize = 32;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Space {
    /// Every labelled digraph of order `p` (arc masks in increasing order),
    /// optionally only the canonical representative of each class.
    Exhaustive { p: usize, canonical: bool },
    /// Every balanced bipartite digraph on `a + a` vertices.
    ExhaustiveBipartite { a: usize },
    /// Every chord set on top of the fixed cycle `x_1 y_1 ... x_a y_a`.
    FixedCycle { a: usize },
    /// `count` digraphs with independent arcs of probability `prob`.
    Random { p: usize, prob: f64, count: u64, seed: u64 },
    /// `count` balanced bipartite digraphs; with `hamiltonian` the fixed cycle
    /// is planted and only the chords are random.
    RandomBipartite { a: usize, prob: f64, count: u64, seed: u64, hamiltonian: bool },
}

/// One candidate of a space.
#[derive(Clone, Debug)]
pub enum Candidate {
    General(Digraph),
    Bipartite(BipartiteDigraph),
}

impl Candidate {
    pub fn subject(&self) -> Subject<'_> {
        match self {
            Candidate::General(d) => Subject::General(d),
            Candidate::Bipartite(b) => Subject::Bipartite(b),
        }
    }

    pub fn digraph(&self) -> &Digraph {
        match self {
            Candidate::General(d) => d,
            Candidate::Bipartite(b) => b.digraph(),
        }
    }

    pub fn to_arc_list(&self) -> String {
        match self {
            Candidate::General(d) => to_arc_list(d, None),
            Candidate::Bipartite(b) => to_arc_list(b.digraph(), Some(b.x_side())),
        }
    }
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn check_prob(prob: f64) -> Result<()> {
    if (0.0..=1.0).contains(&prob) {
        Ok(())
    } else {
        Err(Error::BadParameters(format!("probability {prob} outside [0, 1]")))
    }
}

impl Space {
    /// Number of indices in the space.
    pub fn size(&self) -> Result<u64> {
        let bits = |b: usize| {
            if b > MAX_ENUMERATION_BITS {
                Err(Error::SizeLimit { order: b, limit: MAX_ENUMERATION_BITS })
            } else {
                Ok(1u64 << b)
            }
        };
        match *self {
            Space::Exhaustive { p, .. } => {
                if p == 0 {
                    return Err(Error::BadOrder(0));
                }
                bits(p * (p - 1))
            }
            Space::ExhaustiveBipartite { a } => {
                if a == 0 {
                    return Err(Error::BadOrder(0));
                }
                bits(2 * a * a)
            }
            Space::FixedCycle { a } => {
                if a < 2 {
                    return Err(Error::OrderTooSmall { order: 2 * a, min: 4 });
                }
                bits(fixed_cycle_free_bits(a))
            }
            Space::Random { p, prob, count, .. } => {
                check_prob(prob)?;
                Digraph::empty(p)?;
                Ok(count)
            }
            Space::RandomBipartite { a, prob, count, hamiltonian, .. } => {
                check_prob(prob)?;
                if a == 0 || 2 * a > 64 || (hamiltonian && a < 2) {
                    return Err(Error::BadOrder(2 * a));
                }
                Ok(count)
            }
        }
    }

    /// The candidate at `index`, or `None` when it is filtered out (a
    /// non-canonical labelling).
    pub fn candidate(&self, index: u64) -> Result<Option<Candidate>> {
        Ok(Some(match *self {
            Space::Exhaustive { p, canonical } => {
                let d = Digraph::from_arc_mask(p, index)?;
                if canonical && !d.is_canonical() {
                    return Ok(None);
                }
                Candidate::General(d)
            }
            Space::ExhaustiveBipartite { a } => Candidate::Bipartite(BipartiteDigraph::from_cross_mask(a, index)?),
            Space::FixedCycle { a } => {
                Candidate::Bipartite(BipartiteDigraph::from_cross_mask(a, fixed_cycle_mask(a, index))?)
            }
            Space::Random { p, prob, seed, .. } => {
                let mut rng = rng_for(seed, index);
                let mut out = vec![0u64; p];
                for (u, row) in out.iter_mut().enumerate() {
                    for v in (0..p).filter(|&v| v != u) {
                        if rng.gen_bool(prob) {
                            *row |= 1 << v;
                        }
                    }
                }
                Candidate::General(Digraph::from_out_masks(out)?)
            }
            Space::RandomBipartite { a, prob, seed, hamiltonian, .. } => {
                Candidate::Bipartite(random_bipartite(a, prob, hamiltonian, &mut rng_for(seed, index))?)
            }
        }))
    }
}

/// A balanced bipartite digraph on `X = {0..a}`, `Y = {a..2a}` with each
/// cross arc present with probability `prob`, drawn in the order `x_i y_j`
/// (row-major) then `y_i x_j`. With `hamiltonian` the cycle
/// `x_1 y_1 ... x_a y_a` is always present and only the chords are drawn.
pub fn random_bipartite(a: usize, prob: f64, hamiltonian: bool, rng: &mut impl Rng) -> Result<BipartiteDigraph> {
    check_prob(prob)?;
    if a == 0 || 2 * a > 64 {
        return Err(Error::BadOrder(2 * a));
    }
    let on_cycle = |u: usize, v: usize| hamiltonian && (v == u + a || (u >= a && v == (u - a + 1) % a));
    let mut arcs = Vec::new();
    for (from, to) in [(0, a), (a, 0)] {
        for i in 0..a {
            for j in 0..a {
                let (u, v) = (from + i, to + j);
                if on_cycle(u, v) || rng.gen_bool(prob) {
                    arcs.push((u, v));
                }
            }
        }
    }
    BipartiteDigraph::new(Digraph::new(2 * a, arcs)?, VertexSet::full(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOptions {
    /// Per solver call.
    pub budget: SolveBudget,
    /// Stop after this many indices; the record is then `Truncated`.
    pub max_candidates: Option<u64>,
    /// How many counterexamples and exceptions to keep verbatim.
    pub sample_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { budget: SolveBudget::UNLIMITED, max_candidates: None, sample_cap: 16 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    Complete,
    Truncated,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// Candidates examined (after the canonical filter).
    pub enumerated: u64,
    pub vacuous: u64,
    pub hypothesis_held: u64,
    pub conclusion_held: u64,
    pub exceptions: u64,
    pub counterexamples: u64,
    /// Some solver ran out of budget, in the hypothesis or the conclusion.
    pub exhausted: u64,
}

impl Counts {
    fn add(&mut self, o: &Counts) {
        self.enumerated += o.enumerated;
        self.vacuous += o.vacuous;
        self.hypothesis_held += o.hypothesis_held;
        self.conclusion_held += o.conclusion_held;
        self.exceptions += o.exceptions;
        self.counterexamples += o.counterexamples;
        self.exhausted += o.exhausted;
    }

    /// Every candidate lands in exactly one bucket, and every candidate whose
    /// hypothesis held was decided or exhausted.
    pub fn reconciles(&self) -> bool {
        let decided = self.conclusion_held + self.exceptions + self.counterexamples;
        self.enumerated == self.vacuous + decided + self.exhausted
            && self.hypothesis_held >= decided
            && self.hypothesis_held <= decided + self.exhausted
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub index: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception: Option<String>,
    pub arc_list: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub entry: TheoremId,
    pub proved: bool,
    pub space: Space,
    pub options: ScanOptions,
    pub status: ScanStatus,
    pub counts: Counts,
    /// Failures on recognised families, by class name.
    pub exception_classes: BTreeMap<String, u64>,
    pub counterexamples: Vec<Sample>,
    pub candidate_exceptions: Vec<Sample>,
    /// Wall clock; not part of the reproducible content.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SearchRecord {
    /// The record with timing removed, for reproducibility comparisons.
    pub fn without_timing(&self) -> SearchRecord {
        SearchRecord { elapsed_ms: None, ..self.clone() }
    }

    /// Counterexamples to a proved statement. For open statements the
    /// failures are findings, not defects.
    pub fn has_defect(&self) -> bool {
        self.proved && self.counts.counterexamples > 0
    }
}

#[derive(Default)]
struct Tally {
    counts: Counts,
    classes: BTreeMap<String, u64>,
    cex: Vec<Sample>,
    exc: Vec<Sample>,
    error: Option<(u64, Error)>,
}

fn keep_lowest(v: &mut Vec<Sample>, cap: usize) {
    if v.len() > cap {
        v.sort_by_key(|s| s.index);
        v.truncate(cap);
    }
}

impl Tally {
    fn merge(mut self, other: Tally, cap: usize) -> Tally {
        self.counts.add(&other.counts);
        for (k, n) in other.classes {
            *self.classes.entry(k).or_default() += n;
        }
        self.cex.extend(other.cex);
        self.exc.extend(other.exc);
        keep_lowest(&mut self.cex, cap);
        keep_lowest(&mut self.exc, cap);
        self.error = match (self.error, other.error) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    fn visit(&mut self, entry: TheoremId, space: &Space, index: u64, opts: &ScanOptions) -> Result<()> {
        let Some(c) = space.candidate(index)? else {
            return Ok(());
        };
        let verdict = evaluate(entry, c.subject(), EvalOptions { budget: opts.budget, full_breakdown: false })?;
        self.counts.enumerated += 1;
        if verdict.hypothesis_holds {
            self.counts.hypothesis_held += 1;
        }
        let sample = |exception: Option<String>| Sample { index, exception, arc_list: c.to_arc_list() };
        match verdict.status {
            VerdictStatus::Vacuous => self.counts.vacuous += 1,
            VerdictStatus::ConclusionHolds => self.counts.conclusion_held += 1,
            VerdictStatus::Exhausted => self.counts.exhausted += 1,
            VerdictStatus::Exception => {
                self.counts.exceptions += 1;
                let class = verdict.exception.map(|e| e.to_string()).unwrap_or_default();
                *self.classes.entry(class.clone()).or_default() += 1;
                if self.exc.len() < 2 * opts.sample_cap.max(1) {
                    self.exc.push(sample(Some(class)));
                    keep_lowest(&mut self.exc, opts.sample_cap);
                }
            }
            VerdictStatus::Counterexample => {
                self.counts.counterexamples += 1;
                if self.cex.len() < 2 * opts.sample_cap.max(1) {
                    self.cex.push(sample(verdict.exception.map(|e| e.to_string())));
                    keep_lowest(&mut self.cex, opts.sample_cap);
                }
            }
        }
        Ok(())
    }
}

/// Evaluates `entry` on every candidate of `space` (up to the candidate limit)
/// in parallel on the current rayon pool.
pub fn scan(entry: TheoremId, space: &Space, opts: &ScanOptions) -> Result<SearchRecord> {
    let size = space.size()?;
    let limit = opts.max_candidates.map_or(size, |m| m.min(size));
    // surface scope errors before spawning work
    if entry.is_bipartite() != matches!(space, Space::ExhaustiveBipartite { .. } | Space::FixedCycle { .. } | Space::RandomBipartite { .. }) {
        return Err(Error::ScopeMismatch(format!("{entry} cannot be evaluated on {space:?}")));
    }
    let start = Instant::now();
    let cap = opts.sample_cap;
    let tally = (0..limit)
        .into_par_iter()
        .fold(Tally::default, |mut t, i| {
            if t.error.is_none() {
                if let Err(e) = t.visit(entry, space, i, opts) {
                    t.error = Some((i, e));
                }
            }
            t
        })
        .reduce(Tally::default, |a, b| a.merge(b, cap));
    if let Some((_, e)) = tally.error {
        return Err(e);
    }
    let mut cex = tally.cex;
    let mut exc = tally.exc;
    cex.sort_by_key(|s| s.index);
    exc.sort_by_key(|s| s.index);
    Ok(SearchRecord {
        entry,
        proved: entry.is_proved(),
        space: space.clone(),
        options: *opts,
        status: if limit < size { ScanStatus::Truncated } else { ScanStatus::Complete },
        counts: tally.counts,
        exception_classes: tally.classes,
        counterexamples: cex,
        candidate_exceptions: exc,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Appends the record to `dir/index.jsonl` and writes every retained sample
/// as an arc-list file next to it. Returns the sample paths.
pub fn persist(record: &SearchRecord, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut index = OpenOptions::new().create(true).append(true).open(dir.join("index.jsonl"))?;
    let line = serde_json::to_string(record).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(index, "{line}")?;
    let tag = match &record.space {
        Space::Exhaustive { p, .. } => format!("exh-p{p}"),
        Space::ExhaustiveBipartite { a } => format!("bip-a{a}"),
        Space::FixedCycle { a } => format!("cyc-a{a}"),
        Space::Random { p, seed, .. } => format!("rnd-p{p}-s{seed}"),
        Space::RandomBipartite { a, seed, .. } => format!("rbip-a{a}-s{seed}"),
    };
    let mut paths = Vec::new();
    for (kind, samples) in [("cex", &record.counterexamples), ("exc", &record.candidate_exceptions)] {
        for s in samples {
            let path = dir.join(format!("{}-{tag}-{kind}-{}.arcs", record.entry, s.index));
            fs::write(&path, &s.arc_list)?;
            paths.push(path);
        }
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_candidates_are_reproducible() {
        let s = Space::Random { p: 6, prob: 0.5, count: 10, seed: 7 };
        let a = s.candidate(3).unwrap().unwrap();
        let b = s.candidate(3).unwrap().unwrap();
        assert_eq!(a.digraph(), b.digraph());
        assert_ne!(s.candidate(4).unwrap().unwrap().digraph(), a.digraph());
    }

    #[test]
    fn planted_cycle_is_present() {
        let s = Space::RandomBipartite { a: 4, prob: 0.0, count: 1, seed: 1, hamiltonian: true };
        let c = s.candidate(0).unwrap().unwrap();
        assert_eq!(c.digraph().arc_count(), 8);
    }

    #[test]
    fn small_exhaustive_scan_reconciles() {
        let r = scan(TheoremId::T1_2, &Space::Exhaustive { p: 3, canonical: false }, &ScanOptions::default()).unwrap();
        assert_eq!(r.counts.enumerated, 64);
        assert!(r.counts.reconciles());
        assert_eq!(r.counts.counterexamples, 0);
        assert_eq!(r.counts.hypothesis_held, 7, "K_3* and its six one-arc deletions");
        assert_eq!(r.status, ScanStatus::Complete);
    }

    #[test]
    fn canonical_filter_counts_classes() {
        let r = scan(TheoremId::T1_2, &Space::Exhaustive { p: 3, canonical: true }, &ScanOptions::default()).unwrap();
        // 16 digraphs on 3 unlabelled vertices
        assert_eq!(r.counts.enumerated, 16);
    }

    #[test]
    fn scope_is_checked() {
        let e = scan(TheoremId::T1_6, &Space::Exhaustive { p: 3, canonical: false }, &ScanOptions::default());
        assert!(matches!(e, Err(Error::ScopeMismatch(_))));
    }

    #[test]
    fn truncation_is_reported() {
        let opts = ScanOptions { max_candidates: Some(10), ..ScanOptions::default() };
        let r = scan(TheoremId::T1_3, &Space::Exhaustive { p: 4, canonical: false }, &opts).unwrap();
        assert_eq!(r.status, ScanStatus::Truncated);
        assert_eq!(r.counts.enumerated, 10);
    }

    #[test]
    fn persist_writes_index_and_samples() {
        let dir = tempfile::tempdir().unwrap();
        let r = scan(TheoremId::T1_3, &Space::Exhaustive { p: 3, canonical: false }, &ScanOptions::default()).unwrap();
        assert!(r.counts.exceptions > 0, "C_3 copies are exceptions");
        let paths = persist(&r, dir.path()).unwrap();
        assert_eq!(paths.len(), r.candidate_exceptions.len());
        let index = std::fs::read_to_string(dir.path().join("index.jsonl")).unwrap();
        let back: SearchRecord = serde_json::from_str(index.trim()).unwrap();
        assert_eq!(back, r);
    }
}
