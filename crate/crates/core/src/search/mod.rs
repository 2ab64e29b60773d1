//! Bounded exhaustive search for labelings.
//!
//! The search assigns labels from `[-B, B]` to vertices in a
//! connectivity-respecting order, pruning on duplicate labels, predicate
//! violations against already-labeled neighbors, and (in product mode) the
//! gap-greater-than-one rule against every labeled vertex. Two symmetries
//! are quotiented out: the first vertex is pinned to label 0 (gaps are
//! translation invariant) and the first nonzero assignment is forced
//! positive (gaps are negation invariant).
//!
//! An `exhausted` outcome means the whole quotiented space within the bound
//! was covered — bounded evidence of nonexistence, never a proof. Budget
//! exhaustion is reported separately and never conflated with exhaustion.

mod bounds;
mod two_odd;

pub use bounds::{ppc_scan, ppn_bounds, BoundsError, PpcEntry, PpcStatus, PpnOptions, PpnReport};
pub use two_odd::{
    decide_two_odd, naive_two_odd_oracle, red_blue_conditions_hold, simple_cycles,
    RedBlueColoring, TwoOddError,
};

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::labeling::{self, GapRule, Labeling, PredicateKind};
use crate::ntheory;

/// The predicate a searched labeling must satisfy on every edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum Predicate {
    /// Edge gaps with at most `k` prime factors; additionally every pair of
    /// labels (adjacent or not) must differ by more than 1.
    Product { k: u32 },
    /// Edge gaps of the form `p^j`, `j <= k`.
    Power { k: u32 },
    /// Edge gaps exactly `p^k`.
    Strict { k: u32 },
}

impl Predicate {
    pub fn k(&self) -> u32 {
        match *self {
            Predicate::Product { k } | Predicate::Power { k } | Predicate::Strict { k } => k,
        }
    }

    pub fn kind(&self) -> PredicateKind {
        match self {
            Predicate::Product { .. } => PredicateKind::Product,
            Predicate::Power { .. } => PredicateKind::Power,
            Predicate::Strict { .. } => PredicateKind::Strict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Labels range over `[-label_bound, label_bound]`.
    pub label_bound: i64,
    pub predicate: Predicate,
    /// Cap on assignments attempted before giving up.
    pub node_budget: u64,
    /// Sequential exploration with exact node counts.
    pub deterministic: bool,
    /// Worker count for branch-parallel exploration (ignored when
    /// `deterministic`); 1 means sequential.
    pub jobs: usize,
}

impl SearchConfig {
    pub fn new(label_bound: i64, predicate: Predicate) -> Self {
        SearchConfig {
            label_bound,
            predicate,
            node_budget: 10_000_000,
            deterministic: true,
            jobs: 1,
        }
    }

    pub fn with_budget(mut self, node_budget: u64) -> Self {
        self.node_budget = node_budget;
        self
    }

    pub fn parallel(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self.deterministic = jobs <= 1;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetOut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub certificate: Option<Labeling>,
    pub nodes_explored: u64,
    /// The bound the outcome is relative to; `exhausted` claims nothing
    /// beyond it.
    pub label_bound: i64,
}

/// Outcome of enumerating every certificate in the quotiented space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOutcome {
    pub certificates: Vec<Labeling>,
    /// True when the entire quotiented space within the bound was covered
    /// (no budget cut, no certificate cap).
    pub complete: bool,
    pub nodes_explored: u64,
}

struct Problem {
    n: usize,
    order: Vec<usize>,
    /// Per depth: neighbors of `order[d]` among `order[0..d]`.
    labeled_neighbors: Vec<Vec<usize>>,
    /// Allowed edge gaps, indexed `0..=2B`.
    allowed: Vec<bool>,
    /// The same set as a sorted list, for candidate generation.
    gaps: Vec<u64>,
    product_all_pairs: bool,
    bound: i64,
    budget: u64,
}

fn assignment_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    if n == 0 {
        return order;
    }
    let first = (0..n).max_by_key(|&v| (adj[v].len(), usize::MAX - v)).unwrap();
    order.push(first);
    placed[first] = true;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let labeled = adj[v].iter().filter(|&&u| placed[u]).count();
                (labeled, adj[v].len(), usize::MAX - v)
            })
            .unwrap();
        order.push(next);
        placed[next] = true;
    }
    order
}

fn gap_table(predicate: Predicate, bound: i64) -> Vec<bool> {
    let max_gap = (2 * bound) as usize;
    let mut allowed = vec![false; max_gap + 1];
    match predicate {
        Predicate::Product { k } => {
            // Smallest-prime-factor sieve gives omega for the whole range.
            let mut spf = vec![0u32; max_gap + 1];
            for i in 2..=max_gap {
                if spf[i] == 0 {
                    let mut m = i;
                    while m <= max_gap {
                        if spf[m] == 0 {
                            spf[m] = i as u32;
                        }
                        m += i;
                    }
                }
            }
            for (d, slot) in allowed.iter_mut().enumerate().skip(2) {
                let mut m = d;
                let mut omega = 0u32;
                while m > 1 {
                    omega += 1;
                    m /= spf[m] as usize;
                }
                *slot = omega <= k;
            }
        }
        Predicate::Power { k } => {
            for p in ntheory::primes_up_to(max_gap as u64) {
                let mut value = p;
                let mut j = 1;
                while j <= k && value <= max_gap as u64 {
                    allowed[value as usize] = true;
                    j += 1;
                    value = match value.checked_mul(p) {
                        Some(v) => v,
                        None => break,
                    };
                }
            }
        }
        Predicate::Strict { k } => {
            for p in ntheory::primes_up_to(integer_root(max_gap as u64, k)) {
                if let Some(v) = p.checked_pow(k) {
                    if v <= max_gap as u64 {
                        allowed[v as usize] = true;
                    }
                }
            }
        }
    }
    allowed
}

fn integer_root(n: u64, k: u32) -> u64 {
    if k == 1 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64 + 2;
    while r > 1 && r.checked_pow(k).is_none_or(|v| v > n) {
        r -= 1;
    }
    r
}

fn build_problem(g: &Graph, cfg: &SearchConfig) -> Problem {
    let order = assignment_order(g);
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let labeled_neighbors = order
        .iter()
        .enumerate()
        .map(|(d, &v)| {
            let mut nbrs: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] < d).collect();
            nbrs.sort_by_key(|&u| pos[u]);
            nbrs
        })
        .collect();
    let allowed = gap_table(cfg.predicate, cfg.label_bound);
    let gaps = (0..allowed.len() as u64).filter(|&d| allowed[d as usize]).collect();
    Problem {
        n,
        order,
        labeled_neighbors,
        allowed,
        gaps,
        product_all_pairs: matches!(cfg.predicate, Predicate::Product { .. }),
        bound: cfg.label_bound,
        budget: cfg.node_budget,
    }
}

struct Walk<'p> {
    pb: &'p Problem,
    labels: Vec<i64>,
    used: Vec<bool>,
    nodes: u64,
    budget_hit: bool,
    /// Workers share one relaxed node accumulator; each flushes its local
    /// count every [`FLUSH_EVERY`] nodes and aborts once the shared total
    /// passes the budget. Counts are exact in sequential mode only.
    shared_nodes: Option<&'p AtomicU64>,
    unflushed: u64,
}

const FLUSH_EVERY: u64 = 1024;

impl<'p> Walk<'p> {
    fn new(pb: &'p Problem) -> Self {
        Walk {
            pb,
            labels: vec![i64::MIN; pb.n],
            used: vec![false; (2 * pb.bound + 1) as usize],
            nodes: 0,
            budget_hit: false,
            shared_nodes: None,
            unflushed: 0,
        }
    }

    fn with_shared(pb: &'p Problem, shared: &'p AtomicU64) -> Self {
        let mut w = Walk::new(pb);
        w.shared_nodes = Some(shared);
        w
    }

    /// True when the budget is exhausted, against the shared accumulator
    /// when one is attached.
    fn over_budget(&mut self) -> bool {
        match self.shared_nodes {
            None => self.nodes > self.pb.budget,
            Some(shared) => {
                self.unflushed += 1;
                if self.unflushed >= FLUSH_EVERY {
                    shared.fetch_add(self.unflushed, Ordering::Relaxed);
                    self.unflushed = 0;
                }
                shared.load(Ordering::Relaxed) + self.unflushed > self.pb.budget
            }
        }
    }

    fn flush(&mut self) {
        if let Some(shared) = self.shared_nodes {
            shared.fetch_add(self.unflushed, Ordering::Relaxed);
            self.unflushed = 0;
        }
    }

    fn slot(&self, label: i64) -> usize {
        (label + self.pb.bound) as usize
    }

    fn assign(&mut self, v: usize, label: i64) {
        self.labels[v] = label;
        let s = self.slot(label);
        self.used[s] = true;
    }

    fn unassign(&mut self, v: usize) {
        let s = self.slot(self.labels[v]);
        self.used[s] = false;
        self.labels[v] = i64::MIN;
    }

    fn candidates(&self, depth: usize) -> Vec<i64> {
        let pb = self.pb;
        let lnbs = &pb.labeled_neighbors[depth];
        let mut out = Vec::new();
        let mut push_checked = |cand: i64| {
            if cand.abs() > pb.bound || self.used[(cand + pb.bound) as usize] {
                return;
            }
            if depth == 1 && cand <= 0 {
                return; // negation quotient: first nonzero label positive
            }
            for &u in lnbs {
                let gap = cand.abs_diff(self.labels[u]);
                if !pb.allowed[gap as usize] {
                    return;
                }
            }
            if pb.product_all_pairs {
                for &u in &pb.order[..depth] {
                    if cand.abs_diff(self.labels[u]) < 2 {
                        return;
                    }
                }
            }
            out.push(cand);
        };
        match lnbs.first() {
            Some(&u0) => {
                let base = self.labels[u0];
                for &gap in &pb.gaps {
                    push_checked(base - gap as i64);
                    push_checked(base + gap as i64);
                }
            }
            None => {
                for cand in -pb.bound..=pb.bound {
                    push_checked(cand);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

enum Control {
    Continue,
    Stop,
}

/// Depth-first exploration; `sink` sees each complete assignment and says
/// whether to stop. Returns `Stop` when the sink stopped or the budget ran
/// out (distinguished by `walk.budget_hit`).
fn explore(walk: &mut Walk, depth: usize, sink: &mut dyn FnMut(&[i64]) -> Control) -> Control {
    if depth == walk.pb.n {
        return sink(&walk.labels);
    }
    let v = walk.pb.order[depth];
    let cands = if depth == 0 { vec![0] } else { walk.candidates(depth) };
    for cand in cands {
        walk.nodes += 1;
        if walk.over_budget() {
            walk.budget_hit = true;
            return Control::Stop;
        }
        walk.assign(v, cand);
        let ctl = explore(walk, depth + 1, sink);
        walk.unassign(v);
        if let Control::Stop = ctl {
            return Control::Stop;
        }
    }
    Control::Continue
}

fn certificate_from(labels: &[i64]) -> Labeling {
    Labeling::from_values(labels)
}

fn verify_certificate(g: &Graph, cfg: &SearchConfig, l: &Labeling) -> bool {
    let k = cfg.predicate.k();
    let report = match cfg.predicate {
        Predicate::Product { .. } => {
            labeling::verify_product_with(g, l, k, GapRule::AllPairs)
        }
        Predicate::Power { .. } => labeling::verify_power(g, l, k),
        Predicate::Strict { .. } => labeling::verify_strict(g, l, k),
    };
    report.map(|r| r.ok).unwrap_or(false)
}

/// Searches for one labeling. Sequential (deterministic) mode explores
/// branches in candidate order and stops at the first find; parallel mode
/// splits the top-level label choices across workers and reports the find
/// from the earliest branch, so the result is the same labeling either way.
pub fn search_labeling(g: &Graph, cfg: &SearchConfig) -> SearchOutcome {
    let pb = build_problem(g, cfg);
    if pb.n == 0 {
        return SearchOutcome {
            status: SearchStatus::Found,
            certificate: Some(Labeling::new()),
            nodes_explored: 0,
            label_bound: cfg.label_bound,
        };
    }
    if pb.n == 1 {
        return SearchOutcome {
            status: SearchStatus::Found,
            certificate: Some(Labeling::from_values(&[0])),
            nodes_explored: 1,
            label_bound: cfg.label_bound,
        };
    }

    if cfg.deterministic || cfg.jobs <= 1 {
        let mut walk = Walk::new(&pb);
        let mut found: Option<Labeling> = None;
        explore(&mut walk, 0, &mut |labels| {
            found = Some(certificate_from(labels));
            Control::Stop
        });
        let status = if found.is_some() {
            SearchStatus::Found
        } else if walk.budget_hit {
            SearchStatus::BudgetOut
        } else {
            SearchStatus::Exhausted
        };
        if let Some(cert) = &found {
            debug_assert!(verify_certificate(g, cfg, cert));
        }
        return SearchOutcome {
            status,
            certificate: found,
            nodes_explored: walk.nodes,
            label_bound: cfg.label_bound,
        };
    }

    parallel_search(g, cfg, &pb)
}

fn parallel_search(g: &Graph, cfg: &SearchConfig, pb: &Problem) -> SearchOutcome {
    // Branches are the label choices for the second vertex in order.
    let mut seed = Walk::new(pb);
    seed.assign(pb.order[0], 0);
    let branches = seed.candidates(1);
    seed.unassign(pb.order[0]);

    let global_nodes = AtomicU64::new(1); // the root assignment
    let best_branch = AtomicUsize::new(usize::MAX);
    let budget_hit = AtomicU64::new(0);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .expect("thread pool");

    let results: Vec<Option<Labeling>> = pool.install(|| {
        branches
            .par_iter()
            .enumerate()
            .map(|(bi, &cand)| {
                if best_branch.load(Ordering::Relaxed) < bi {
                    return None; // an earlier branch already found one
                }
                let mut walk = Walk::with_shared(pb, &global_nodes);
                walk.assign(pb.order[0], 0);
                walk.assign(pb.order[1], cand);
                walk.unflushed = 1; // the branch assignment itself
                let mut found: Option<Labeling> = None;
                explore(&mut walk, 2, &mut |labels| {
                    found = Some(certificate_from(labels));
                    Control::Stop
                });
                walk.flush();
                if walk.budget_hit {
                    budget_hit.store(1, Ordering::Relaxed);
                }
                if found.is_some() {
                    best_branch.fetch_min(bi, Ordering::Relaxed);
                }
                found
            })
            .collect()
    });

    let found = results.into_iter().flatten().next();
    let status = if found.is_some() {
        SearchStatus::Found
    } else if budget_hit.load(Ordering::Relaxed) != 0 {
        SearchStatus::BudgetOut
    } else {
        SearchStatus::Exhausted
    };
    if let Some(cert) = &found {
        debug_assert!(verify_certificate(g, cfg, cert));
    }
    SearchOutcome {
        status,
        certificate: found,
        nodes_explored: global_nodes.load(Ordering::Relaxed),
        label_bound: cfg.label_bound,
    }
}

/// Enumerates every certificate in the quotiented space, up to
/// `max_certificates`.
pub fn enumerate_labelings(
    g: &Graph,
    cfg: &SearchConfig,
    max_certificates: usize,
) -> EnumerationOutcome {
    let pb = build_problem(g, cfg);
    if pb.n == 0 {
        return EnumerationOutcome {
            certificates: vec![Labeling::new()],
            complete: true,
            nodes_explored: 0,
        };
    }
    let mut walk = Walk::new(&pb);
    let mut certs = Vec::new();
    let mut capped = false;
    explore(&mut walk, 0, &mut |labels| {
        certs.push(certificate_from(labels));
        if certs.len() >= max_certificates {
            capped = true;
            Control::Stop
        } else {
            Control::Continue
        }
    });
    for cert in &certs {
        debug_assert!(verify_certificate(g, cfg, cert));
    }
    EnumerationOutcome {
        complete: !capped && !walk.budget_hit,
        certificates: certs,
        nodes_explored: walk.nodes,
    }
}
