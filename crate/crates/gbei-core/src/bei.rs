//! Binomial edge ideals for an m-row matrix of indeterminates: minimal
//! primes from cut sets, heights, generator counts, bounds on projective
//! and cohomological dimension and arithmetical rank, and the four
//! complete-intersection-style classifications.

use crate::graph::SimpleGraph;
use crate::groebner::GbBudget;
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, RingSpec};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// The ideal of all 2-minors supported on the edges of a graph.
#[derive(Clone, Debug)]
pub struct Gbei {
    m: u32,
    graph: SimpleGraph,
    ideal: Ideal,
}

impl Gbei {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn spec(&self) -> RingSpec {
        self.ideal.spec()
    }

    /// Number of generators: one minor per row pair and edge.
    pub fn mu(&self) -> u64 {
        mu_count(self.m, &self.graph)
    }
}

pub fn mu_count(m: u32, g: &SimpleGraph) -> u64 {
    (m as u64) * (m as u64 - 1) / 2 * g.edge_count() as u64
}

fn edge_minors(spec: RingSpec, m: u32, vertices_pairs: &[(u32, u32)]) -> Result<Vec<Polynomial>> {
    let mut gens = Vec::new();
    for &(i, j) in vertices_pairs {
        for k in 1..=m {
            for l in (k + 1)..=m {
                gens.push(Polynomial::minor(spec, k, l, i, j)?);
            }
        }
    }
    Ok(gens)
}

pub fn build_gbei(m: u32, g: &SimpleGraph, characteristic: u64) -> Result<Gbei> {
    let spec = RingSpec::new(m, g.n() as u32, characteristic)?;
    build_gbei_with(m, g, spec.default_order(), GbBudget::default(), characteristic)
}

pub fn build_gbei_with(
    m: u32,
    g: &SimpleGraph,
    order: MonomialOrder,
    budget: GbBudget,
    characteristic: u64,
) -> Result<Gbei> {
    let spec = RingSpec::new(m, g.n() as u32, characteristic)?;
    let gens = edge_minors(spec, m, &g.edges())?;
    Ok(Gbei {
        m,
        graph: g.clone(),
        ideal: Ideal::new(spec, gens, order, budget)?,
    })
}

/// The prime indexed by a vertex set `T`: the column variables of `T` plus
/// the full minor ideals of the complete graphs on the components of G - T.
#[derive(Clone, Debug)]
pub struct PrimeComponent {
    t: Vec<u32>,
    components: Vec<Vec<u32>>,
    height: u64,
    ideal: Ideal,
}

impl PrimeComponent {
    pub fn t(&self) -> &[u32] {
        &self.t
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    /// `(m-1)(n - c(T)) + |T|`.
    pub fn height(&self) -> u64 {
        self.height
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }
}

pub fn prime_component(
    m: u32,
    g: &SimpleGraph,
    t: &[u32],
    characteristic: u64,
) -> Result<PrimeComponent> {
    let spec = RingSpec::new(m, g.n() as u32, characteristic)?;
    prime_component_with(m, g, t, spec.default_order(), GbBudget::default(), characteristic)
}

fn prime_component_with(
    m: u32,
    g: &SimpleGraph,
    t: &[u32],
    order: MonomialOrder,
    budget: GbBudget,
    characteristic: u64,
) -> Result<PrimeComponent> {
    let spec = RingSpec::new(m, g.n() as u32, characteristic)?;
    let mut t: Vec<u32> = t.to_vec();
    t.sort();
    t.dedup();
    let components = g.components_after_deletion(&t)?;
    let mut gens = Vec::new();
    for &i in &t {
        for k in 1..=m {
            gens.push(Polynomial::var(spec, k, i)?);
        }
    }
    for comp in &components {
        let mut pairs = Vec::new();
        for (a, &i) in comp.iter().enumerate() {
            for &j in comp.iter().skip(a + 1) {
                pairs.push((i, j));
            }
        }
        gens.extend(edge_minors(spec, m, &pairs)?);
    }
    let height =
        (m as u64 - 1) * (g.n() as u64 - components.len() as u64) + t.len() as u64;
    Ok(PrimeComponent {
        t,
        components,
        height,
        ideal: Ideal::new(spec, gens, order, budget)?,
    })
}

/// One prime per cut set, sorted by the cut set.
pub fn minimal_primes(m: u32, g: &SimpleGraph, characteristic: u64) -> Result<Vec<PrimeComponent>> {
    minimal_primes_with(m, g, characteristic, GbBudget::default())
}

fn minimal_primes_with(
    m: u32,
    g: &SimpleGraph,
    characteristic: u64,
    budget: GbBudget,
) -> Result<Vec<PrimeComponent>> {
    let spec = RingSpec::new(m, g.n() as u32, characteristic)?;
    let order = spec.default_order();
    let mut out = Vec::new();
    for t in g.cut_sets()? {
        let pc = prime_component_with(m, g, &t, order.clone(), budget.clone(), characteristic)?;
        // A nonempty cut set always leaves at least two components.
        debug_assert!(pc.t.is_empty() || pc.components.len() >= 2);
        out.push(pc);
    }
    Ok(out)
}

/// Height of the edge-minor ideal: minimum of `(m-1)(n-c(T)) + |T|` over
/// cut sets.
pub fn height_formula(m: u32, g: &SimpleGraph) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidInput("m must be at least 2".into()));
    }
    let n = g.n() as u64;
    let mut best = None;
    for t in g.cut_sets()? {
        let c = g.components_after_deletion(&t)?.len() as u64;
        let h = (m as u64 - 1) * (n - c) + t.len() as u64;
        best = Some(best.map_or(h, |b: u64| b.min(h)));
    }
    best.ok_or_else(|| Error::Internal("connected graph has no cut sets".into()))
}

fn require_nonempty_cut_set(g: &SimpleGraph, t: &[u32]) -> Result<()> {
    if t.is_empty() {
        return Err(Error::InvalidInput("T must be nonempty".into()));
    }
    let c = g.components_after_deletion(t)?.len();
    for &i in t {
        let smaller: Vec<u32> = t.iter().copied().filter(|&x| x != i).collect();
        if g.components_after_deletion(&smaller)?.len() >= c {
            return Err(Error::InvalidInput(format!(
                "{t:?} is not a cut set: removing {i} does not lower the component count"
            )));
        }
    }
    Ok(())
}

/// Height of the sum of the empty-set prime and the prime at a nonempty cut
/// set `T`: always `(m-1)(n-1) + |T|`, which is at least `(m-1)(n-1) + k(G)`.
pub fn sum_height_empty_t(m: u32, g: &SimpleGraph, t: &[u32]) -> Result<u64> {
    require_nonempty_cut_set(g, t)?;
    let n = g.n() as u64;
    let v = (m as u64 - 1) * (n - 1) + t.len() as u64;
    if g.n() >= 2 && !g.is_complete() {
        let k = g.vertex_connectivity()? as u64;
        if v < (m as u64 - 1) * (n - 1) + k {
            return Err(Error::Internal(
                "cut set smaller than the vertex connectivity".into(),
            ));
        }
    }
    Ok(v)
}

/// Lower bound for the cohomological dimension of the intersection of the
/// empty-set prime with the prime at nonempty cut set `T`: `mn - m - n + |T|`.
pub fn pairwise_cd_lower(m: u32, g: &SimpleGraph, t: &[u32]) -> Result<u64> {
    require_nonempty_cut_set(g, t)?;
    let n = g.n() as u64;
    let mm = m as u64;
    Ok(mm * n - mm - n + t.len() as u64)
}

/// Three-valued classification outcome.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

impl Range {
    pub fn exact(&self) -> Option<u64> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Bounds {
    pub pd: Range,
    pub cd: Range,
    pub ara: Range,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Flags {
    pub ci: TriState,
    pub aci: TriState,
    pub cci: TriState,
    pub stci: TriState,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Provenance {
    pub bound: String,
    pub theorem: String,
    pub value: i64,
}

/// Everything the analysis derives for one `(m, G, char)` triple.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundsReport {
    pub graph: String,
    pub m: u32,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub ht: u64,
    pub mu: u64,
    pub bounds: Bounds,
    pub flags: Flags,
    pub provenance: Vec<Provenance>,
}

impl BoundsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph: {}\n", self.graph));
        out.push_str(&format!("m: {}  char: {}\n", self.m, self.characteristic));
        out.push_str(&format!("ht: {}  mu: {}\n", self.ht, self.mu));
        for (name, r) in [("pd", self.bounds.pd), ("cd", self.bounds.cd), ("ara", self.bounds.ara)]
        {
            if let Some(v) = r.exact() {
                out.push_str(&format!("{name}: {v}\n"));
            } else {
                out.push_str(&format!("{name}: [{}, {}]\n", r.lo, r.hi));
            }
        }
        let fl = |t: TriState| match t {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        };
        out.push_str(&format!(
            "ci: {}  aci: {}  cci: {}  stci: {}\n",
            fl(self.flags.ci),
            fl(self.flags.aci),
            fl(self.flags.cci),
            fl(self.flags.stci)
        ));
        out.push_str("provenance:\n");
        for p in &self.provenance {
            out.push_str(&format!("  {} = {}  ({})\n", p.bound, p.value, p.theorem));
        }
        out
    }
}

/// Structural facts the bound assembly and classifications branch on.
struct Detectors {
    complete: bool,
    star: bool,
    // Diamond or 4-clique whose edge removal leaves trees hanging at two or
    // more distinct clique vertices.
    clique_pendant_trees: bool,
    // Triangle whose edge removal leaves three paths, sizes sorted ascending.
    triangle_paths: Option<[usize; 3]>,
    // Two vertex-disjoint paths on >= 3 vertices whose leading edges are
    // joined crosswise by two bridge edges; sizes of the two paths.
    bridged_paths: Option<(usize, usize)>,
    // Two nonadjacent vertices adjacent to everything else: (p, other edges).
    two_universal: Option<(usize, usize)>,
    // Some split of the complement components leaves an edge on both sides
    // and three or more vertices on one side.
    join_split: bool,
}

fn for_each_subset<F: FnMut(&[u32])>(n: usize, size: usize, f: &mut F) {
    fn go<F: FnMut(&[u32])>(n: u32, start: u32, acc: &mut Vec<u32>, left: usize, f: &mut F) {
        if left == 0 {
            f(acc);
            return;
        }
        for v in start..=n {
            if ((n - v + 1) as usize) < left {
                break;
            }
            acc.push(v);
            go(n, v + 1, acc, left - 1, f);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity(size);
    go(n as u32, 1, &mut acc, size, f);
}

fn component_is_path_anchored(g_minus: &SimpleGraph, comp: &[u32], anchor: u32) -> bool {
    let (ind, labels) = g_minus.induced(comp).expect("component vertices valid");
    if !ind.is_path() {
        return false;
    }
    let pos = labels.iter().position(|&v| v == anchor).expect("anchor in component") as u32 + 1;
    ind.degree(pos) <= 1
}

fn detect_clique_pendant_trees(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n < 6 {
        return false;
    }
    let mut found = false;
    for_each_subset(n, 4, &mut |s: &[u32]| {
        if found {
            return;
        }
        let (core, _) = g.induced(s).expect("subset valid");
        if !(core.is_diamond() || core.is_complete()) {
            return;
        }
        let mut core_edges = Vec::new();
        for (a, &u) in s.iter().enumerate() {
            for &w in s.iter().skip(a + 1) {
                if g.has_edge(u, w) {
                    core_edges.push((u, w));
                }
            }
        }
        let h = g.without_edges(&core_edges).expect("edges present");
        let comps = h.components_after_deletion(&[]).expect("no deletions");
        let mut nonsingleton = 0;
        for comp in &comps {
            let in_core = comp.iter().filter(|v| s.contains(v)).count();
            if in_core != 1 {
                return;
            }
            let (ind, _) = h.induced(comp).expect("component valid");
            if !ind.is_tree() {
                return;
            }
            if comp.len() > 1 {
                nonsingleton += 1;
            }
        }
        if nonsingleton >= 2 {
            found = true;
        }
    });
    found
}

fn detect_triangle_paths(g: &SimpleGraph) -> Option<[usize; 3]> {
    let n = g.n();
    if n < 4 {
        return None;
    }
    let mut result = None;
    for_each_subset(n, 3, &mut |s: &[u32]| {
        if result.is_some() {
            return;
        }
        let (a, b, c) = (s[0], s[1], s[2]);
        if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
            return;
        }
        let h = g
            .without_edges(&[(a, b), (b, c), (a, c)])
            .expect("triangle edges present");
        let comps = h.components_after_deletion(&[]).expect("no deletions");
        if comps.len() != 3 {
            return;
        }
        let mut lens = [0usize; 3];
        for comp in &comps {
            let anchors: Vec<u32> = comp.iter().copied().filter(|v| s.contains(v)).collect();
            if anchors.len() != 1 {
                return;
            }
            if !component_is_path_anchored(&h, comp, anchors[0]) {
                return;
            }
            let idx = s.iter().position(|&v| v == anchors[0]).unwrap();
            lens[idx] = comp.len();
        }
        lens.sort();
        // A bare triangle is the complete graph on three vertices; the
        // pendant-path bound needs at least one genuine path.
        if lens[2] >= 2 {
            result = Some(lens);
        }
    });
    result
}

fn detect_bridged_paths(g: &SimpleGraph) -> Option<(usize, usize)> {
    let edges = g.edges();
    for (ea_idx, &(a1, a2)) in edges.iter().enumerate() {
        for &(b1, b2) in edges.iter().skip(ea_idx + 1) {
            if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
                continue;
            }
            // Try both pairings of bridge endpoints to path heads.
            for (u1, v1, u2, v2) in [(a1, a2, b1, b2), (a1, a2, b2, b1)] {
                let h = match g.without_edges(&[(a1, a2), (b1, b2)]) {
                    Ok(h) => h,
                    Err(_) => continue,
                };
                let comps = h.components_after_deletion(&[]).expect("no deletions");
                if comps.len() != 2 {
                    continue;
                }
                let find = |v: u32| comps.iter().position(|c| c.contains(&v)).unwrap();
                if find(u1) != find(u2) || find(v1) != find(v2) || find(u1) == find(v1) {
                    continue;
                }
                let cu = &comps[find(u1)];
                let cv = &comps[find(v1)];
                if cu.len() < 3 || cv.len() < 3 {
                    continue;
                }
                let ok = |comp: &Vec<u32>, head: u32, second: u32| {
                    let (ind, _) = h.induced(comp).expect("component valid");
                    ind.is_path()
                        && h.degree(head) == 1
                        && h.neighbors(head) == vec![second]
                };
                if ok(cu, u1, u2) && ok(cv, v1, v2) {
                    return Some((cu.len(), cv.len()));
                }
            }
        }
    }
    None
}

fn detect_two_universal(g: &SimpleGraph) -> Option<(usize, usize)> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    for a in 1..=n as u32 {
        for b in (a + 1)..=n as u32 {
            if !g.has_edge(a, b) && g.degree(a) == n - 2 && g.degree(b) == n - 2 {
                let p = n - 2;
                let rest = g.edge_count() - 2 * p;
                return Some((p, rest));
            }
        }
    }
    None
}

fn detect_join_split(g: &SimpleGraph) -> bool {
    let n = g.n();
    let mut comp_edges = Vec::new();
    for i in 1..=n as u32 {
        for j in (i + 1)..=n as u32 {
            if !g.has_edge(i, j) {
                comp_edges.push((i, j));
            }
        }
    }
    let complement = SimpleGraph::new(n, &comp_edges).expect("same vertex set");
    let comps = complement.components_after_deletion(&[]).expect("no deletions");
    if comps.len() < 2 {
        return false;
    }
    let edges_within = |side: &[u32]| -> usize {
        let mut count = 0;
        for (a, &u) in side.iter().enumerate() {
            for &w in side.iter().skip(a + 1) {
                if g.has_edge(u, w) {
                    count += 1;
                }
            }
        }
        count
    };
    // Any grouping of complement components into two sides realizes the
    // graph as a join of the sides.
    let k = comps.len();
    for bits in 1..(1u32 << (k - 1)) {
        let mut side_a = Vec::new();
        let mut side_b = Vec::new();
        for (idx, comp) in comps.iter().enumerate() {
            if bits >> idx & 1 == 1 {
                side_a.extend_from_slice(comp);
            } else {
                side_b.extend_from_slice(comp);
            }
        }
        if side_a.len().max(side_b.len()) >= 3
            && edges_within(&side_a) >= 1
            && edges_within(&side_b) >= 1
        {
            return true;
        }
    }
    false
}

fn detect(g: &SimpleGraph, m: u32) -> Detectors {
    let complete = g.is_complete();
    let star = !complete && g.n() >= 3 && g.is_star();
    if m != 2 {
        // The family results below are two-row statements.
        return Detectors {
            complete,
            star,
            clique_pendant_trees: false,
            triangle_paths: None,
            bridged_paths: None,
            two_universal: None,
            join_split: false,
        };
    }
    Detectors {
        complete,
        star,
        clique_pendant_trees: detect_clique_pendant_trees(g),
        triangle_paths: detect_triangle_paths(g),
        bridged_paths: detect_bridged_paths(g),
        two_universal: detect_two_universal(g),
        join_split: detect_join_split(g),
    }
}

struct Candidates {
    entries: Vec<Provenance>,
}

impl Candidates {
    fn new() -> Self {
        Candidates { entries: Vec::new() }
    }

    fn push(&mut self, bound: &str, theorem: &str, value: u64) {
        self.entries.push(Provenance {
            bound: bound.into(),
            theorem: theorem.into(),
            value: value as i64,
        });
    }

    fn flag(&mut self, bound: &str, theorem: &str, state: TriState) {
        self.entries.push(Provenance {
            bound: bound.into(),
            theorem: theorem.into(),
            value: match state {
                TriState::Yes => 1,
                TriState::No => 0,
                TriState::Unknown => -1,
            },
        });
    }

    fn min_for(&self, bound: &str) -> Option<u64> {
        self.entries
            .iter()
            .filter(|p| p.bound == bound)
            .map(|p| p.value as u64)
            .min()
    }

    fn max_for(&self, bound: &str) -> Option<u64> {
        self.entries
            .iter()
            .filter(|p| p.bound == bound)
            .map(|p| p.value as u64)
            .max()
    }
}

fn validate_analysis_input(m: u32, g: &SimpleGraph, characteristic: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidInput("m must be at least 2".into()));
    }
    if characteristic != 0 && !crate::field::is_prime_u64(characteristic) {
        return Err(Error::InvalidInput(format!(
            "characteristic {characteristic} is neither 0 nor prime"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::InvalidInput(
            "analysis needs at least two vertices".into(),
        ));
    }
    Ok(())
}

/// Full bound-and-classification report for `(m, G, char)`. Entirely
/// combinatorial: no Groebner bases are computed here.
pub fn bounds_report(m: u32, g: &SimpleGraph, characteristic: u64) -> Result<BoundsReport> {
    validate_analysis_input(m, g, characteristic)?;
    let n = g.n() as u64;
    let q = g.edge_count() as u64;
    let mm = m as u64;
    let ht = height_formula(m, g)?;
    let mu = mu_count(m, g);
    let k = g.vertex_connectivity()? as u64;
    let r = g.max_clique() as u64;
    let generic = (mm - 1) * (n - 1);
    let det = detect(g, m);

    let mut c = Candidates::new();
    c.push("ht", "minimum of (m-1)(n-c(T))+|T| over cut sets", ht);
    c.push("mu", "(m(m-1)/2)|E| minors", mu);

    // Upper bounds for the arithmetical rank.
    c.push("ara_upper", "size of the generating set", mu);
    if det.complete {
        c.push("ara_upper", "complete graph: mn-3 equations suffice", mm * n - 3);
        c.push(
            "ara_lower",
            "complete graph: fewer than mn-3 equations never suffice",
            mm * n - 3,
        );
    }
    if r >= 2 {
        let clique_bound = mm * (mm - 1) / 2 * (q - r * (r - 1) / 2) + r * mm - 3;
        c.push(
            "ara_upper",
            "largest clique covered by rm-3 equations, one per remaining minor",
            clique_bound,
        );
    }
    if det.clique_pendant_trees {
        c.push(
            "ara_upper",
            "4-clique or diamond with pendant trees: n-1 equations",
            n - 1,
        );
        c.push(
            "ara_lower",
            "4-clique or diamond with pendant trees: exactly n-1 equations",
            n - 1,
        );
        c.push(
            "pd_exact",
            "4-clique or diamond with pendant trees: projective dimension n-1",
            n - 1,
        );
    }
    if det.triangle_paths.is_some() {
        c.push(
            "ara_upper",
            "triangle with pendant paths: n-1 equations",
            n - 1,
        );
    }
    if let Some((p, rest)) = det.two_universal {
        let p = p as u64;
        c.push(
            "pd_exact",
            "two nonadjacent universal vertices: projective dimension 2(n-2)",
            2 * p,
        );
        if rest <= 3 {
            c.push(
                "ara_upper",
                "two nonadjacent universal vertices, at most 3 other edges: 2(n-2) equations",
                2 * p,
            );
            c.push(
                "ara_lower",
                "two nonadjacent universal vertices, at most 3 other edges: exactly 2(n-2)",
                2 * p,
            );
        }
    }
    if det.join_split {
        c.push(
            "ara_upper",
            "join of two graphs each holding an edge: |E|-3 equations",
            q - 3,
        );
    }
    let ara_hi = c.min_for("ara_upper").expect("mu always present");

    // Exact or bounded cohomological dimension.
    c.push("cd_upper", "cohomological dimension never exceeds the arithmetical rank", ara_hi);
    if det.complete {
        if characteristic > 0 {
            c.push(
                "cd_upper",
                "complete graph, positive characteristic: cohomological dimension (m-1)(n-1)",
                generic,
            );
            c.push(
                "cd_lower",
                "complete graph, positive characteristic: cohomological dimension (m-1)(n-1)",
                generic,
            );
        } else {
            c.push(
                "cd_upper",
                "complete graph, characteristic zero: cohomological dimension mn-3",
                mm * n - 3,
            );
            c.push(
                "cd_lower",
                "complete graph, characteristic zero: cohomological dimension mn-3",
                mm * n - 3,
            );
        }
    }
    if det.star {
        if characteristic > 0 {
            c.push(
                "cd_upper",
                "star graph, positive characteristic: cohomological dimension (m-1)(n-1)",
                generic,
            );
        }
        c.push(
            "cd_lower",
            "star graph: cohomological dimension at least (m-1)(n-1)",
            generic,
        );
    }
    if let Some((ru, su)) = det.bridged_paths {
        let _ = (ru, su);
        c.push(
            "cd_upper",
            "two paths bridged at their heads: cohomological dimension n-1",
            n - 1,
        );
        c.push(
            "cd_lower",
            "two paths bridged at their heads: cohomological dimension n-1",
            n - 1,
        );
    }
    if !det.complete {
        c.push(
            "cd_lower",
            "non-complete graph: cohomological dimension at least mn-m-n+k(G)",
            mm * n - mm - n + k,
        );
    }

    // Fold the chain: lower bounds ratchet up along ht <= pd <= cd <= ara,
    // upper bounds ratchet down along pd <= cd <= ara <= mu.
    let pd_exact_lo = c.max_for("pd_exact");
    let pd_lo = ht.max(pd_exact_lo.unwrap_or(0));
    let cd_lo = pd_lo.max(c.max_for("cd_lower").unwrap_or(0));
    let ara_lo = cd_lo.max(c.max_for("ara_lower").unwrap_or(0));
    let cd_hi = c.min_for("cd_upper").unwrap_or(ara_hi);
    let pd_hi = cd_hi.min(pd_exact_lo.unwrap_or(u64::MAX));
    let mut pd = Range { lo: pd_lo, hi: pd_hi };
    let cd = Range { lo: cd_lo, hi: cd_hi };
    let ara = Range { lo: ara_lo, hi: ara_hi };

    // Classifications.
    let ci_numeric = mu == ht;
    let ci_structural = m == 2 && g.is_path();
    if ci_numeric != ci_structural {
        return Err(Error::Internal(format!(
            "complete-intersection checks disagree on {}: numeric {ci_numeric}, structural {ci_structural}",
            g.canonical_id()
        )));
    }
    let ci = if ci_numeric { TriState::Yes } else { TriState::No };
    c.flag(
        "ci",
        "mu equals ht exactly when m=2 and the graph is a path",
        ci,
    );

    let aci = if mu == ht + 1 { TriState::Yes } else { TriState::No };
    c.flag("aci", "numeric test mu == ht + 1", aci);

    let fam1 = det
        .triangle_paths
        .map(|lens| lens.iter().all(|&l| l >= 2))
        .unwrap_or(false);
    let fam2 = det.bridged_paths.is_some();
    let (cci, cci_reason): (TriState, &str) = if ht < generic {
        (
            TriState::No,
            "a minimal prime of height (m-1)(n-1) exceeds ht: non-equidimensional, not Cohen-Macaulay",
        )
    } else if let Some(cd_exact) = cd.exact() {
        if cd_exact == ht {
            (TriState::Yes, "cohomological dimension equals height")
        } else {
            (TriState::No, "cohomological dimension exceeds height")
        }
    } else if cd.lo > ht {
        (
            TriState::No,
            "cohomological dimension lower bound exceeds height",
        )
    } else if m >= 3 {
        (
            TriState::No,
            "for m >= 3 only complete graphs in positive characteristic qualify",
        )
    } else if aci == TriState::Yes && !g.is_triangle() {
        if fam1 || fam2 {
            (
                TriState::Yes,
                "almost complete intersection with Cohen-Macaulay quotient",
            )
        } else {
            (
                TriState::No,
                "almost complete intersection outside the Cohen-Macaulay families",
            )
        }
    } else {
        (
            TriState::Unknown,
            "no exact cohomological dimension available",
        )
    };
    c.flag("cci", cci_reason, cci);

    let (stci, stci_reason): (TriState, &str) = if ht < generic {
        (
            TriState::No,
            "a minimal prime of height (m-1)(n-1) exceeds ht: non-equidimensional, not Cohen-Macaulay",
        )
    } else if let Some(ara_exact) = ara.exact() {
        if ara_exact == ht {
            (TriState::Yes, "arithmetical rank equals height")
        } else {
            (TriState::No, "arithmetical rank exceeds height")
        }
    } else if ara.lo > ht {
        (
            TriState::No,
            "arithmetical rank lower bound exceeds height",
        )
    } else if m >= 3 {
        (
            TriState::No,
            "for m >= 3 the arithmetical rank always exceeds the height",
        )
    } else if cci == TriState::No {
        (
            TriState::No,
            "cohomological obstruction: cd = ht fails, so ara = ht fails",
        )
    } else {
        (TriState::Unknown, "no exact arithmetical rank available")
    };
    c.flag("stci", stci_reason, stci);

    if cci == TriState::No && stci == TriState::Yes {
        return Err(Error::Internal(
            "set-theoretic yes with cohomological no".into(),
        ));
    }

    // A cohomological complete intersection has Cohen-Macaulay quotient, so
    // its projective dimension collapses to the height.
    if cci == TriState::Yes {
        if pd.lo > ht || pd.hi < ht {
            return Err(Error::Internal(
                "Cohen-Macaulay refinement conflicts with projective dimension bounds".into(),
            ));
        }
        pd = Range { lo: ht, hi: ht };
        c.push(
            "pd_exact",
            "Cohen-Macaulay quotient: projective dimension equals height",
            ht,
        );
    }

    for (name, range) in [("pd", pd), ("cd", cd), ("ara", ara)] {
        if range.lo > range.hi {
            return Err(Error::Internal(format!(
                "{name} bounds cross on {}: [{}, {}]",
                g.canonical_id(),
                range.lo,
                range.hi
            )));
        }
    }
    if ht > pd.lo || ara.hi > mu {
        return Err(Error::Internal("bound chain out of order".into()));
    }

    Ok(BoundsReport {
        graph: g.canonical_id(),
        m,
        characteristic,
        ht,
        mu,
        bounds: Bounds { pd, cd, ara },
        flags: Flags { ci, aci, cci, stci },
        provenance: c.entries,
    })
}

pub fn classify_ci(m: u32, g: &SimpleGraph) -> Result<bool> {
    Ok(bounds_report(m, g, 0)?.flags.ci == TriState::Yes)
}

pub fn classify_aci(m: u32, g: &SimpleGraph) -> Result<bool> {
    Ok(bounds_report(m, g, 0)?.flags.aci == TriState::Yes)
}

pub fn classify_cci(m: u32, g: &SimpleGraph, characteristic: u64) -> Result<TriState> {
    Ok(bounds_report(m, g, characteristic)?.flags.cci)
}

pub fn classify_stci(m: u32, g: &SimpleGraph) -> Result<TriState> {
    Ok(bounds_report(m, g, 0)?.flags.stci)
}

/// What the decomposition check concluded.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecomposeOutcome {
    pub holds: bool,
    pub primes: usize,
}

/// Check that the edge-minor ideal equals the intersection of its cut-set
/// primes, by reduced-basis equality. Resource caps surface as errors, never
/// as a wrong boolean.
pub fn decompose_verify(
    m: u32,
    g: &SimpleGraph,
    characteristic: u64,
    budget: &GbBudget,
) -> Result<DecomposeOutcome> {
    validate_analysis_input(m, g, characteristic)?;
    let spec = RingSpec::new(m, g.n() as u32, characteristic)?;
    let order = spec.default_order();
    let gbei = build_gbei_with(m, g, order.clone(), budget.clone(), characteristic)?;
    let primes = minimal_primes_with(m, g, characteristic, budget.clone())?;
    let mut iter = primes.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Internal("no minimal primes".into()))?;
    let mut acc = first.ideal.clone();
    for p in iter {
        acc = acc.intersection(&p.ideal)?;
    }
    Ok(DecomposeOutcome {
        holds: gbei.ideal().equals(&acc)?,
        primes: primes.len(),
    })
}

/// Graphs for the sweep subcommand, one per `(family, parameter)`.
pub fn sweep_graph(family: &str, param: usize) -> Result<SimpleGraph> {
    use crate::graph;
    match family {
        "path" => graph::path_graph(param),
        "cycle" => graph::cycle_graph(param),
        "star" => graph::star_graph(param),
        "complete" => graph::complete_graph(param),
        "complete_bipartite" => graph::complete_bipartite(2, param),
        "k4_plus_paths" | "diamond_plus_paths" => {
            if param < 6 {
                return Err(Error::InvalidInput(format!(
                    "{family} needs at least 6 vertices"
                )));
            }
            // For the diamond, attach at a degree-3 and a degree-2 vertex;
            // hanging trees from both degree-3 vertices would let their
            // removal shatter the rim and drop the height below n-1.
            let (core, second) = if family == "k4_plus_paths" {
                (graph::complete_graph(4)?, 2)
            } else {
                (graph::diamond_graph(), 3)
            };
            let extra = param - 4;
            let a = extra - extra / 2;
            let b = extra / 2;
            let with_first = graph::attach_tree(&core, 1, &graph::path_graph(a + 1)?)?;
            graph::attach_tree(&with_first, second, &graph::path_graph(b + 1)?)
        }
        "join_2k1" => {
            if param < 1 {
                return Err(Error::InvalidInput("join_2k1 needs p >= 1".into()));
            }
            // A path on at most 4 of the p vertices keeps the non-universal
            // edge count at 3 or below.
            let edges: Vec<(u32, u32)> = (1..param.min(4) as u32).map(|i| (i, i + 1)).collect();
            let base = SimpleGraph::new(param, &edges)?;
            graph::join(&base, &graph::null_graph(2)?)
        }
        other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
    }
}

pub const SWEEP_FAMILIES: &[&str] = &[
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
    "k4_plus_paths",
    "diamond_plus_paths",
    "join_2k1",
];
