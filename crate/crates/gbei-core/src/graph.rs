//! Simple graphs on 1-based vertex labels: connectivity, cut sets, cliques,
//! family recognizers, and the constructors used by the analysis layer.

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// An undirected simple graph on vertices `1..=n`, `n <= 64`.
///
/// Adjacency is a bitset per vertex (bit `v-1` of `adj[u-1]` is edge `{u,v}`),
/// which keeps subset-heavy operations like cut-set enumeration cheap.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

/// Structural families a graph can belong to, in recognizer form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FamilyTag {
    Null,
    Path,
    Cycle,
    Tree,
    Star,
    Complete,
    CompleteBipartite(u32, u32),
    Triangle,
    Diamond,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Null => write!(f, "null"),
            FamilyTag::Path => write!(f, "path"),
            FamilyTag::Cycle => write!(f, "cycle"),
            FamilyTag::Tree => write!(f, "tree"),
            FamilyTag::Star => write!(f, "star"),
            FamilyTag::Complete => write!(f, "complete"),
            FamilyTag::CompleteBipartite(p, q) => write!(f, "complete_bipartite({p},{q})"),
            FamilyTag::Triangle => write!(f, "triangle"),
            FamilyTag::Diamond => write!(f, "diamond"),
        }
    }
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidInput(format!(
                "vertex count {n} outside supported range 1..=64"
            )));
        }
        let mut adj = vec![0u64; n];
        for &(i, j) in edges {
            if i == j {
                return Err(Error::InvalidInput(format!("loop at vertex {i}")));
            }
            if i < 1 || j < 1 || i as usize > n || j as usize > n {
                return Err(Error::InvalidInput(format!(
                    "edge ({i},{j}) outside vertex range 1..={n}"
                )));
            }
            adj[(i - 1) as usize] |= 1 << (j - 1);
            adj[(j - 1) as usize] |= 1 << (i - 1);
        }
        Ok(SimpleGraph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|b| b.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, i: u32, j: u32) -> bool {
        i != j
            && i >= 1
            && j >= 1
            && (i as usize) <= self.n
            && (j as usize) <= self.n
            && self.adj[(i - 1) as usize] >> (j - 1) & 1 == 1
    }

    /// Edges as sorted pairs (i < j), ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.n as u32 {
            for j in (i + 1)..=self.n as u32 {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[(v - 1) as usize].count_ones() as usize
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut bits = self.adj[(v - 1) as usize];
        while bits != 0 {
            let b = bits.trailing_zeros();
            out.push(b + 1);
            bits &= bits - 1;
        }
        out
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Connected components of the subgraph induced on `mask` (bit v-1 = v).
    fn components_in_mask(&self, mask: u64) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        let mut rest = mask;
        while rest != 0 {
            let start = rest.trailing_zeros();
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    grow |= self.adj[v] & mask;
                    f &= f - 1;
                }
                frontier = grow & !comp;
                comp |= grow;
            }
            comps.push(comp);
            seen |= comp;
            rest = mask & !seen;
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components_in_mask(self.full_mask()).len() <= 1
    }

    fn mask_to_vertices(mask: u64) -> Vec<u32> {
        let mut out = Vec::new();
        let mut bits = mask;
        while bits != 0 {
            out.push(bits.trailing_zeros() + 1);
            bits &= bits - 1;
        }
        out
    }

    fn vertices_to_mask(&self, vs: &[u32]) -> Result<u64> {
        let mut mask = 0u64;
        for &v in vs {
            if v < 1 || v as usize > self.n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} outside range 1..={}",
                    self.n
                )));
            }
            mask |= 1 << (v - 1);
        }
        Ok(mask)
    }

    /// Connected components of `G` minus the vertex set `t`, each sorted,
    /// ordered by smallest member.
    pub fn components_after_deletion(&self, t: &[u32]) -> Result<Vec<Vec<u32>>> {
        let tmask = self.vertices_to_mask(t)?;
        let comps = self.components_in_mask(self.full_mask() & !tmask);
        Ok(comps.iter().map(|&c| Self::mask_to_vertices(c)).collect())
    }

    fn component_count(&self, deleted: u64) -> usize {
        self.components_in_mask(self.full_mask() & !deleted).len()
    }

    /// All vertex sets `T` with the property that removing any single member
    /// of `T` strictly lowers the number of components of `G - T` (plus the
    /// empty set). Sorted lexicographically.
    pub fn cut_sets(&self) -> Result<Vec<Vec<u32>>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n > 20 {
            return Err(Error::ResourceCap(format!(
                "cut-set enumeration over 2^{} subsets refused (cap n <= 20)",
                self.n
            )));
        }
        let mut out: Vec<Vec<u32>> = vec![Vec::new()];
        for t in 1u64..(1 << self.n) {
            let c = self.component_count(t);
            let mut every = true;
            let mut bits = t;
            while bits != 0 {
                let v = bits.trailing_zeros();
                if self.component_count(t & !(1 << v)) >= c {
                    every = false;
                    break;
                }
                bits &= bits - 1;
            }
            if every {
                out.push(Self::mask_to_vertices(t));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Minimum number of vertices whose removal disconnects the graph;
    /// `n - 1` for complete graphs.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        if self.n < 2 {
            return Err(Error::InvalidInput(
                "vertex connectivity needs at least two vertices".into(),
            ));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.is_complete() {
            return Ok(self.n - 1);
        }
        for size in 1..self.n {
            let mut found = false;
            self.for_each_subset_of_size(size, |mask| {
                if self.component_count(mask) >= 2 {
                    found = true;
                }
            });
            if found {
                return Ok(size);
            }
        }
        Err(Error::Internal(
            "non-complete connected graph has no vertex cut".into(),
        ))
    }

    fn for_each_subset_of_size<F: FnMut(u64)>(&self, size: usize, mut f: F) {
        fn go<F: FnMut(u64)>(n: usize, start: usize, left: usize, acc: u64, f: &mut F) {
            if left == 0 {
                f(acc);
                return;
            }
            for v in start..n {
                if n - v < left {
                    break;
                }
                go(n, v + 1, left - 1, acc | (1 << v), f);
            }
        }
        go(self.n, 0, size, 0, &mut f);
    }

    /// Exact maximum clique size by branch and bound.
    pub fn max_clique(&self) -> usize {
        fn grow(g: &SimpleGraph, cand: u64, current: usize, best: &mut usize) {
            if current + cand.count_ones() as usize <= *best {
                return;
            }
            if cand == 0 {
                *best = (*best).max(current);
                return;
            }
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                if current + 1 + c.count_ones() as usize <= *best {
                    break;
                }
                grow(g, c & g.adj[v], current + 1, best);
            }
            *best = (*best).max(current);
        }
        if self.n == 0 {
            return 0;
        }
        let mut best = 1;
        grow(self, self.full_mask(), 0, &mut best);
        best
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_null(&self) -> bool {
        self.edge_count() == 0
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn is_path(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        if !self.is_tree() {
            return false;
        }
        (1..=self.n as u32).all(|v| self.degree(v) <= 2)
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.is_connected()
            && (1..=self.n as u32).all(|v| self.degree(v) == 2)
    }

    /// A center adjacent to every other vertex and no further edges. The
    /// one- and two-vertex connected graphs qualify degenerately.
    pub fn is_star(&self) -> bool {
        if !self.is_connected() || self.edge_count() != self.n - 1 {
            return false;
        }
        if self.n <= 2 {
            return true;
        }
        (1..=self.n as u32).any(|v| self.degree(v) == self.n - 1)
    }

    /// The bipartition `(p, q)` with `p <= q` if the graph is complete
    /// bipartite (both sides nonempty, all cross edges, no inner edges).
    pub fn complete_bipartition(&self) -> Option<(u32, u32)> {
        if self.n < 2 || !self.is_connected() {
            return None;
        }
        // Two-color greedily; completeness then forces all cross edges.
        let mut color = vec![u8::MAX; self.n];
        let mut stack = vec![0usize];
        color[0] = 0;
        while let Some(u) = stack.pop() {
            for w in Self::mask_to_vertices(self.adj[u]) {
                let w = (w - 1) as usize;
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    stack.push(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
        let p = color.iter().filter(|&&c| c == 0).count();
        let q = self.n - p;
        if self.edge_count() != p * q {
            return None;
        }
        Some((p.min(q) as u32, p.max(q) as u32))
    }

    pub fn is_diamond(&self) -> bool {
        if self.n != 4 || self.edge_count() != 5 {
            return false;
        }
        // Five edges on four vertices is K4 minus one edge; the degree
        // sequence check is redundant but cheap insurance.
        let mut degs: Vec<usize> = (1..=4).map(|v| self.degree(v)).collect();
        degs.sort();
        degs == [2, 2, 3, 3]
    }

    pub fn is_triangle(&self) -> bool {
        self.n == 3 && self.edge_count() == 3
    }

    /// Every family tag that applies, sorted.
    pub fn classify_family(&self) -> Vec<FamilyTag> {
        let mut tags = Vec::new();
        if self.is_null() {
            tags.push(FamilyTag::Null);
        }
        if self.is_path() {
            tags.push(FamilyTag::Path);
        }
        if self.is_cycle() {
            tags.push(FamilyTag::Cycle);
        }
        if self.is_tree() {
            tags.push(FamilyTag::Tree);
        }
        if self.is_star() {
            tags.push(FamilyTag::Star);
        }
        if self.is_complete() {
            tags.push(FamilyTag::Complete);
        }
        if let Some((p, q)) = self.complete_bipartition() {
            tags.push(FamilyTag::CompleteBipartite(p, q));
        }
        if self.is_triangle() {
            tags.push(FamilyTag::Triangle);
        }
        if self.is_diamond() {
            tags.push(FamilyTag::Diamond);
        }
        tags.sort();
        tags
    }

    /// Subgraph induced on `vs`; returns the graph on `1..=vs.len()` and the
    /// original label of each new vertex.
    pub fn induced(&self, vs: &[u32]) -> Result<(SimpleGraph, Vec<u32>)> {
        let mut labels: Vec<u32> = vs.to_vec();
        labels.sort();
        labels.dedup();
        self.vertices_to_mask(&labels)?;
        let mut edges = Vec::new();
        for (a, &u) in labels.iter().enumerate() {
            for (b, &w) in labels.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, w) {
                    edges.push((a as u32 + 1, b as u32 + 1));
                }
            }
        }
        Ok((SimpleGraph::new(labels.len().max(1), &edges)?, labels))
    }

    /// Same vertex set with the listed edges removed.
    pub fn without_edges(&self, drop: &[(u32, u32)]) -> Result<SimpleGraph> {
        let mut g = self.clone();
        for &(i, j) in drop {
            if !self.has_edge(i, j) {
                return Err(Error::InvalidInput(format!(
                    "edge ({i},{j}) not present"
                )));
            }
            g.adj[(i - 1) as usize] &= !(1 << (j - 1));
            g.adj[(j - 1) as usize] &= !(1 << (i - 1));
        }
        Ok(g)
    }

    /// Canonical one-line form `n=<n> E=<i>-<j>,...` used in reports.
    pub fn canonical_id(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect();
        format!("n={} E={}", self.n, edges.join(","))
    }

    /// Graph file format: first line the vertex count, then one `i j` line
    /// per edge; `#` starts a comment.
    pub fn parse(text: &str) -> Result<SimpleGraph> {
        let mut lines = text
            .lines()
            .map(|l| match l.find('#') {
                Some(p) => &l[..p],
                None => l,
            })
            .map(str::trim)
            .filter(|l| !l.is_empty());
        let first = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count line {first:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let (a, b) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            };
            let i: u32 = a
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {a:?}")))?;
            let j: u32 = b
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {b:?}")))?;
            edges.push((i, j));
        }
        SimpleGraph::new(n, &edges).map_err(|e| match e {
            Error::InvalidInput(msg) => Error::Parse(msg),
            other => other,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

pub fn path_graph(n: usize) -> Result<SimpleGraph> {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i, i + 1)).collect();
    SimpleGraph::new(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::InvalidInput("cycle needs at least 3 vertices".into()));
    }
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i, i + 1)).collect();
    edges.push((1, n as u32));
    SimpleGraph::new(n, &edges)
}

pub fn complete_graph(n: usize) -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    for i in 1..=n as u32 {
        for j in (i + 1)..=n as u32 {
            edges.push((i, j));
        }
    }
    SimpleGraph::new(n, &edges)
}

/// Star with center 1 and leaves 2..=n.
pub fn star_graph(n: usize) -> Result<SimpleGraph> {
    let edges: Vec<(u32, u32)> = (2..=n as u32).map(|j| (1, j)).collect();
    SimpleGraph::new(n, &edges)
}

/// Complete bipartite graph on parts `1..=p` and `p+1..=p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<SimpleGraph> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidInput("both parts must be nonempty".into()));
    }
    let mut edges = Vec::new();
    for i in 1..=p as u32 {
        for j in (p as u32 + 1)..=(p + q) as u32 {
            edges.push((i, j));
        }
    }
    SimpleGraph::new(p + q, &edges)
}

pub fn null_graph(n: usize) -> Result<SimpleGraph> {
    SimpleGraph::new(n, &[])
}

/// K4 minus the edge {3,4}: vertices 1 and 2 form the hinge.
pub fn diamond_graph() -> SimpleGraph {
    SimpleGraph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
}

/// Join: every vertex of `g` becomes adjacent to every vertex of `h`; the
/// vertices of `h` are relabeled by adding `g.n()`.
pub fn join(g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
    let p = g.n() as u32;
    let q = h.n() as u32;
    let mut edges = g.edges();
    for (i, j) in h.edges() {
        edges.push((i + p, j + p));
    }
    for i in 1..=p {
        for j in (p + 1)..=(p + q) {
            edges.push((i, j));
        }
    }
    SimpleGraph::new((p + q) as usize, &edges)
}

/// Glue `g2` onto `g1` along a shared clique. `shared` pairs a vertex of
/// `g1` with the vertex of `g2` identified with it; both sides must induce
/// complete subgraphs on their ends of the pairing. Unshared `g2` vertices
/// are relabeled after `g1`'s; the returned map sends each `g2` vertex to
/// its label in the result.
pub fn clique_sum(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    shared: &[(u32, u32)],
) -> Result<(SimpleGraph, Vec<u32>)> {
    let ones: Vec<u32> = shared.iter().map(|&(a, _)| a).collect();
    let twos: Vec<u32> = shared.iter().map(|&(_, b)| b).collect();
    let distinct: BTreeSet<u32> = twos.iter().copied().collect();
    if distinct.len() != twos.len() {
        return Err(Error::InvalidInput("shared pairing repeats a vertex".into()));
    }
    for list in [(&ones, g1), (&twos, g2)] {
        let (vs, g) = list;
        for (a, &u) in vs.iter().enumerate() {
            for &w in vs.iter().skip(a + 1) {
                if !g.has_edge(u, w) {
                    return Err(Error::InvalidInput(
                        "shared vertices do not induce a complete subgraph".into(),
                    ));
                }
            }
        }
        if vs.is_empty() {
            return Err(Error::InvalidInput("shared set must be nonempty".into()));
        }
    }
    let mut map = vec![0u32; g2.n() + 1];
    for &(a, b) in shared {
        map[b as usize] = a;
    }
    let mut next = g1.n() as u32 + 1;
    for v in 1..=g2.n() as u32 {
        if map[v as usize] == 0 {
            map[v as usize] = next;
            next += 1;
        }
    }
    let total = (next - 1) as usize;
    let mut edges = g1.edges();
    for (i, j) in g2.edges() {
        let (a, b) = (map[i as usize], map[j as usize]);
        if !(a <= g1.n() as u32 && b <= g1.n() as u32 && g1.has_edge(a, b)) {
            edges.push((a.min(b), a.max(b)));
        }
    }
    Ok((SimpleGraph::new(total, &edges)?, map[1..].to_vec()))
}

/// Attach a tree to `g` by identifying the tree's vertex 1 with `v`.
pub fn attach_tree(g: &SimpleGraph, v: u32, tree: &SimpleGraph) -> Result<SimpleGraph> {
    if !tree.is_tree() {
        return Err(Error::InvalidInput("attachment graph is not a tree".into()));
    }
    let (joined, _) = clique_sum(g, tree, &[(v, 1)])?;
    Ok(joined)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_have_expected_edge_counts() {
        assert_eq!(path_graph(5).unwrap().edge_count(), 4);
        assert_eq!(cycle_graph(5).unwrap().edge_count(), 5);
        assert_eq!(complete_graph(5).unwrap().edge_count(), 10);
        assert_eq!(star_graph(5).unwrap().edge_count(), 4);
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert_eq!(diamond_graph().edge_count(), 5);
        assert!(null_graph(3).unwrap().is_null());
    }

    #[test]
    fn deletion_components() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(
            c4.components_after_deletion(&[]).unwrap(),
            vec![vec![1, 2, 3, 4]]
        );
        assert_eq!(
            c4.components_after_deletion(&[2, 4]).unwrap(),
            vec![vec![1], vec![3]]
        );
        let p3 = path_graph(3).unwrap();
        assert_eq!(
            p3.components_after_deletion(&[2]).unwrap(),
            vec![vec![1], vec![3]]
        );
    }

    #[test]
    fn cut_sets_match_known_answers() {
        let empty: Vec<u32> = vec![];
        assert_eq!(complete_graph(4).unwrap().cut_sets().unwrap(), vec![empty.clone()]);
        assert_eq!(
            cycle_graph(4).unwrap().cut_sets().unwrap(),
            vec![empty.clone(), vec![1, 3], vec![2, 4]]
        );
        assert_eq!(
            path_graph(3).unwrap().cut_sets().unwrap(),
            vec![empty, vec![2]]
        );
        let disconnected = SimpleGraph::new(3, &[(1, 2)]).unwrap();
        assert!(matches!(disconnected.cut_sets(), Err(Error::Disconnected)));
    }

    #[test]
    fn cut_sets_definition_brute_force_small() {
        // Independent check of the predicate on all connected graphs, n = 4.
        for bits in 0u32..(1 << 6) {
            let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let g = SimpleGraph::new(4, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let got = g.cut_sets().unwrap();
            for t in &got {
                if t.is_empty() {
                    continue;
                }
                let c = g.components_after_deletion(t).unwrap().len();
                for &i in t {
                    let smaller: Vec<u32> = t.iter().copied().filter(|&x| x != i).collect();
                    let c2 = g.components_after_deletion(&smaller).unwrap().len();
                    assert!(c2 < c, "{t:?} fails predicate in {}", g.canonical_id());
                }
                assert!(c >= 2, "nonempty cut set with one component");
            }
        }
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(complete_graph(4).unwrap().vertex_connectivity().unwrap(), 3);
        assert_eq!(cycle_graph(4).unwrap().vertex_connectivity().unwrap(), 2);
        assert_eq!(star_graph(3).unwrap().vertex_connectivity().unwrap(), 1);
        assert_eq!(diamond_graph().vertex_connectivity().unwrap(), 2);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(null_graph(4).unwrap().max_clique(), 1);
        assert_eq!(diamond_graph().max_clique(), 3);
        assert_eq!(complete_graph(6).unwrap().max_clique(), 6);
        assert_eq!(cycle_graph(5).unwrap().max_clique(), 2);
        assert_eq!(complete_bipartite(3, 3).unwrap().max_clique(), 2);
    }

    #[test]
    fn family_tags() {
        use FamilyTag::*;
        assert_eq!(
            path_graph(3).unwrap().classify_family(),
            vec![Path, Tree, Star, CompleteBipartite(1, 2)]
        );
        assert_eq!(
            cycle_graph(3).unwrap().classify_family(),
            vec![Cycle, Complete, Triangle]
        );
        let k4_minus = complete_graph(4).unwrap().without_edges(&[(1, 2)]).unwrap();
        assert_eq!(k4_minus.classify_family(), vec![Diamond]);
        assert_eq!(
            complete_bipartite(2, 3).unwrap().classify_family(),
            vec![CompleteBipartite(2, 3)]
        );
    }

    #[test]
    fn join_edge_count_and_shape() {
        // Joining a p-vertex and q-vertex graph adds p*q cross edges.
        let e1 = SimpleGraph::new(2, &[(1, 2)]).unwrap();
        let h = SimpleGraph::new(3, &[(1, 2)]).unwrap();
        let j = join(&e1, &h).unwrap();
        assert_eq!(j.edge_count(), 2 * 3 + 1 + 1);
        assert_eq!(
            j.edges(),
            vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4)
            ]
        );
        let kb = join(&null_graph(3).unwrap(), &null_graph(2).unwrap()).unwrap();
        assert_eq!(kb.complete_bipartition(), Some((2, 3)));
    }

    #[test]
    fn clique_sum_and_tree_attachment() {
        let (g, map) = clique_sum(
            &diamond_graph(),
            &path_graph(3).unwrap(),
            &[(2, 1)],
        )
        .unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(map, vec![2, 5, 6]);

        let shared_not_clique = clique_sum(
            &diamond_graph(),
            &complete_graph(2).unwrap(),
            &[(3, 1), (4, 2)],
        );
        assert!(shared_not_clique.is_err());

        let with_path = attach_tree(&complete_graph(3).unwrap(), 1, &path_graph(2).unwrap())
            .unwrap();
        assert_eq!(with_path.n(), 4);
        assert_eq!(with_path.degree(1), 3);
        let not_a_tree = attach_tree(&complete_graph(3).unwrap(), 1, &cycle_graph(3).unwrap());
        assert!(not_a_tree.is_err());
    }

    #[test]
    fn file_format_roundtrip() {
        let g = diamond_graph();
        let text = g.to_text();
        let back = SimpleGraph::parse(&text).unwrap();
        assert_eq!(g, back);
        let commented = "# a diamond\n4\n1 2\n1 3 # hinge\n1 4\n2 3\n2 4\n";
        assert_eq!(SimpleGraph::parse(commented).unwrap(), g);
        assert!(SimpleGraph::parse("").is_err());
        assert!(SimpleGraph::parse("3\n1 2 3\n").is_err());
        assert!(SimpleGraph::parse("2\n1 5\n").is_err());
        assert_eq!(g.canonical_id(), "n=4 E=1-2,1-3,1-4,2-3,2-4");
    }
}
