//! Finite simple undirected graphs with exact small-instance parameters.
//!
//! Vertices are 0-based internally and 1-based in files.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Branch-and-bound budget: exact parameters are only attempted up to here.
pub const EXACT_VERTEX_BUDGET: usize = 40;

const NODE_BUDGET: u64 = 20_000_000;

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>, // always (min, max), no loops
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.edges.insert((i, j));
            }
        }
        g
    }

    /// Cycle 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n).unwrap();
            }
        } else if n == 2 {
            g.add_edge(0, 1).unwrap();
        }
        g
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::GraphParse(format!("loop at vertex {}", i + 1)));
        }
        if i >= self.n || j >= self.n {
            return Err(Error::GraphParse(format!(
                "edge ({}, {}) out of range for n = {}",
                i + 1,
                j + 1,
                self.n
            )));
        }
        self.edges.insert((i.min(j), i.max(j)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adjacent(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.adjacent(u, v)).count()
    }

    /// Edge {i,j} present iff absent in self, for all i ≠ j.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if !self.adjacent(i, j) {
                    g.edges.insert((i, j));
                }
            }
        }
        g
    }

    /// Relabel vertices by a permutation: vertex v becomes sigma[v].
    pub fn relabel(&self, sigma: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (i, j) in self.edges() {
            g.add_edge(sigma[i], sigma[j]).expect("permutation preserves validity");
        }
        g
    }

    /// Cartesian product; vertex (i,k) maps to index i·other.n + k.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut g = Graph::empty(self.n * m);
        for i in 0..self.n {
            for k in 0..m {
                for j in 0..self.n {
                    for l in 0..m {
                        let a = i * m + k;
                        let b = j * m + l;
                        if a >= b {
                            continue;
                        }
                        let adj = (self.adjacent(i, j) && k == l) || (i == j && other.adjacent(k, l));
                        if adj {
                            g.edges.insert((a, b));
                        }
                    }
                }
            }
        }
        g
    }

    /// Categorical product: adjacent exactly when both coordinates are.
    pub fn categorical_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut g = Graph::empty(self.n * m);
        for (i, j) in self.edges() {
            for (k, l) in other.edges() {
                let a = i * m + k;
                let b = j * m + l;
                g.edges.insert((a.min(b), a.max(b)));
                let a = i * m + l;
                let b = j * m + k;
                g.edges.insert((a.min(b), a.max(b)));
            }
        }
        g
    }

    /// Blowup on [d]×[n]: (k,i) ~ (l,j) iff i ~ j, or i = j and k ≠ l.
    /// This is the classical graph with `S_H = M_d(S_G)` under the row-major
    /// index (k,i) ↦ k·n + i.
    pub fn amplified(&self, d: usize) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(d * n);
        for k in 0..d {
            for l in 0..d {
                for i in 0..n {
                    for j in 0..n {
                        let a = k * n + i;
                        let b = l * n + j;
                        if a >= b {
                            continue;
                        }
                        if self.adjacent(i, j) || (i == j && k != l) {
                            g.edges.insert((a, b));
                        }
                    }
                }
            }
        }
        g
    }

    /// Canonical form under vertex permutations (exponential; n ≤ 8).
    pub fn canonical(&self) -> Graph {
        assert!(self.n <= 8, "canonical form only for small graphs");
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best: Option<Graph> = None;
        permute(&mut perm, 0, &mut |p| {
            let g = self.relabel(p);
            if best.as_ref().map_or(true, |b| g < *b) {
                best = Some(g);
            }
        });
        best.unwrap_or_else(|| self.clone())
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// All isomorphism classes of graphs on exactly `n ≤ 6` vertices,
/// canonical representatives in deterministic order.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "isomorphism-class enumeration only up to 6 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut g = Graph::empty(n);
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                g.edges.insert((i, j));
            }
        }
        let canon = g.canonical();
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out
}

/// Seeded Erdős–Rényi-style graph; each pair is an edge with the given
/// probability in thousandths.
pub fn random_graph(n: usize, edge_prob_milli: u32, seed: u64) -> Graph {
    use rand::Rng;
    let mut rng = crate::linalg::random::rng_from_seed(seed);
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_range(0..1000) < edge_prob_milli {
                g.edges.insert((i, j));
            }
        }
    }
    g
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

/// Parse the edge-list text format: header `n m`, then m lines `i j` (1-based).
/// Duplicate edges are deduplicated; loops and out-of-range vertices reject.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::GraphParse("empty input".into()))?;
    let mut head = header.split_whitespace();
    let n: usize = head
        .next()
        .ok_or_else(|| Error::GraphParse("missing vertex count".into()))?
        .parse()
        .map_err(|_| Error::GraphParse(format!("bad vertex count in header '{header}'")))?;
    let m: usize = head
        .next()
        .ok_or_else(|| Error::GraphParse("missing edge count".into()))?
        .parse()
        .map_err(|_| Error::GraphParse(format!("bad edge count in header '{header}'")))?;
    if head.next().is_some() {
        return Err(Error::GraphParse(format!("trailing tokens in header '{header}'")));
    }
    let mut g = Graph::empty(n);
    let mut parsed = 0usize;
    for line in lines {
        if parsed == m {
            return Err(Error::GraphParse("more edge lines than declared".into()));
        }
        let mut it = line.split_whitespace();
        let i: usize = it
            .next()
            .ok_or_else(|| Error::GraphParse(format!("malformed line '{line}'")))?
            .parse()
            .map_err(|_| Error::GraphParse(format!("malformed line '{line}'")))?;
        let j: usize = it
            .next()
            .ok_or_else(|| Error::GraphParse(format!("malformed line '{line}'")))?
            .parse()
            .map_err(|_| Error::GraphParse(format!("malformed line '{line}'")))?;
        if it.next().is_some() {
            return Err(Error::GraphParse(format!("trailing tokens in line '{line}'")));
        }
        if i == 0 || j == 0 {
            return Err(Error::GraphParse(format!("vertices are 1-based in '{line}'")));
        }
        g.add_edge(i - 1, j - 1)?;
        parsed += 1;
    }
    if parsed != m {
        return Err(Error::GraphParse(format!(
            "declared {m} edges but found {parsed}"
        )));
    }
    Ok(g)
}

/// Emit the edge-list text format (1-based, deterministic edge order).
pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{} {}", i + 1, j + 1);
    }
    out
}

// ---------------------------------------------------------------------------
// exact parameters
// ---------------------------------------------------------------------------

fn check_budget(g: &Graph, what: &str) -> Result<()> {
    if g.n() > EXACT_VERTEX_BUDGET {
        return Err(Error::ExactUnavailable(format!(
            "{what}: {} vertices exceeds the exact budget of {EXACT_VERTEX_BUDGET}",
            g.n()
        )));
    }
    Ok(())
}

/// Exact independence number with a witness set, by branch and bound with a
/// greedy-colouring upper bound.
pub fn alpha_exact(g: &Graph) -> Result<(usize, Vec<usize>)> {
    check_budget(g, "alpha_exact")?;
    if g.n() == 0 {
        return Ok((0, vec![]));
    }
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut nodes: u64 = 0;
    // order candidates by ascending degree for better early bounds
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| g.degree(v));
    branch_alpha(g, &order, &mut current, &mut best, &mut nodes)?;
    best.sort_unstable();
    Ok((best.len(), best))
}

fn branch_alpha(
    g: &Graph,
    candidates: &[usize],
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    nodes: &mut u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes > NODE_BUDGET {
        return Err(Error::ExactUnavailable(
            "alpha_exact: branch-and-bound node budget exhausted".into(),
        ));
    }
    if current.len() + candidates.len() <= best.len() {
        return Ok(());
    }
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return Ok(());
    }
    // greedy clique-cover bound: candidates covered by k cliques admit at most k
    let bound = clique_cover_bound(g, candidates);
    if current.len() + bound <= best.len() {
        return Ok(());
    }
    let v = candidates[0];
    // branch 1: take v
    let rest_take: Vec<usize> = candidates[1..]
        .iter()
        .copied()
        .filter(|&u| !g.adjacent(u, v))
        .collect();
    current.push(v);
    branch_alpha(g, &rest_take, current, best, nodes)?;
    current.pop();
    // branch 2: skip v
    branch_alpha(g, &candidates[1..], current, best, nodes)?;
    Ok(())
}

fn clique_cover_bound(g: &Graph, candidates: &[usize]) -> usize {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        let mut placed = false;
        for clique in cliques.iter_mut() {
            if clique.iter().all(|&u| g.adjacent(u, v)) {
                clique.push(v);
                placed = true;
                break;
            }
        }
        if !placed {
            cliques.push(vec![v]);
        }
    }
    cliques.len()
}

/// Exact clique number via the complement.
pub fn omega_exact(g: &Graph) -> Result<(usize, Vec<usize>)> {
    alpha_exact(&g.complement())
}

/// Exact chromatic number with an optimal colouring, by iterative deepening
/// with a greedy clique lower bound and DSATUR-ordered backtracking.
pub fn chi_exact(g: &Graph) -> Result<(usize, Vec<usize>)> {
    check_budget(g, "chi_exact")?;
    let n = g.n();
    if n == 0 {
        return Ok((0, vec![]));
    }
    if g.edge_count() == 0 {
        return Ok((1, vec![0; n]));
    }
    let lb = greedy_clique(g).len().max(1);
    let (ub, greedy_col) = greedy_dsatur(g);
    if lb == ub {
        return Ok((ub, greedy_col));
    }
    for k in lb..ub {
        let mut colouring = vec![usize::MAX; n];
        let mut nodes: u64 = 0;
        match colour_backtrack(g, k, &mut colouring, &mut nodes) {
            Ok(true) => return Ok((k, colouring)),
            Ok(false) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok((ub, greedy_col))
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.adjacent(u, v)) {
            clique.push(v);
        }
    }
    clique
}

fn greedy_dsatur(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    for _ in 0..n {
        // pick uncoloured vertex with max saturation, tie-break max degree
        let mut pick = usize::MAX;
        let mut pick_sat = 0usize;
        let mut pick_deg = 0usize;
        for v in 0..n {
            if colour[v] != usize::MAX {
                continue;
            }
            let sat = saturation(g, &colour, v);
            let deg = g.degree(v);
            if pick == usize::MAX || sat > pick_sat || (sat == pick_sat && deg > pick_deg) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        let mut c = 0usize;
        while g.neighbors(pick).iter().any(|&u| colour[u] == c) {
            c += 1;
        }
        colour[pick] = c;
    }
    let k = colour.iter().max().map_or(0, |&c| c + 1);
    (k, colour)
}

fn saturation(g: &Graph, colour: &[usize], v: usize) -> usize {
    let mut seen = BTreeSet::new();
    for u in g.neighbors(v) {
        if colour[u] != usize::MAX {
            seen.insert(colour[u]);
        }
    }
    seen.len()
}

fn colour_backtrack(g: &Graph, k: usize, colour: &mut [usize], nodes: &mut u64) -> Result<bool> {
    *nodes += 1;
    if *nodes > NODE_BUDGET {
        return Err(Error::ExactUnavailable(
            "chi_exact: backtracking node budget exhausted".into(),
        ));
    }
    // DSATUR choice of next vertex
    let n = g.n();
    let mut pick = usize::MAX;
    let mut pick_sat = 0usize;
    let mut pick_deg = 0usize;
    for v in 0..n {
        if colour[v] != usize::MAX {
            continue;
        }
        let sat = saturation(g, colour, v);
        let deg = g.degree(v);
        if pick == usize::MAX || sat > pick_sat || (sat == pick_sat && deg > pick_deg) {
            pick = v;
            pick_sat = sat;
            pick_deg = deg;
        }
    }
    if pick == usize::MAX {
        return Ok(true);
    }
    let used_so_far = colour
        .iter()
        .filter(|&&c| c != usize::MAX)
        .max()
        .map_or(0, |&c| c + 1);
    // allow at most one fresh colour to break symmetry
    let limit = k.min(used_so_far + 1);
    for c in 0..limit {
        if g.neighbors(pick).iter().any(|&u| colour[u] == c) {
            continue;
        }
        colour[pick] = c;
        if colour_backtrack(g, k, colour, nodes)? {
            return Ok(true);
        }
        colour[pick] = usize::MAX;
    }
    Ok(false)
}

/// Partition form of a colouring: classes in order of first appearance.
pub fn colouring_to_parts(colouring: &[usize]) -> Vec<Vec<usize>> {
    let k = colouring.iter().max().map_or(0, |&c| c + 1);
    let mut parts = vec![Vec::new(); k];
    for (v, &c) in colouring.iter().enumerate() {
        parts[c].push(v);
    }
    parts.retain(|p| !p.is_empty());
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force maximum independent set by subset enumeration.
    fn alpha_brute(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let ok = verts
                .iter()
                .enumerate()
                .all(|(a, &i)| verts[a + 1..].iter().all(|&j| !g.adjacent(i, j)));
            if ok {
                best = best.max(verts.len());
            }
        }
        best
    }

    /// Brute-force chromatic number by colouring enumeration.
    fn chi_brute(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        'k: for k in 1..=n {
            let total = (k as u64).pow(n as u32);
            'assign: for code in 0..total {
                let mut c = code;
                let mut colour = vec![0usize; n];
                for slot in colour.iter_mut() {
                    *slot = (c % k as u64) as usize;
                    c /= k as u64;
                }
                for (i, j) in g.edges() {
                    if colour[i] == colour[j] {
                        continue 'assign;
                    }
                }
                return k;
            }
            continue 'k;
        }
        n
    }

    #[test]
    fn c5_parameters() {
        let c5 = Graph::cycle(5);
        assert_eq!(alpha_brute(&c5), 2);
        assert_eq!(chi_brute(&c5), 3);
        assert_eq!(alpha_exact(&c5).unwrap().0, 2);
        assert_eq!(omega_exact(&c5).unwrap().0, 2);
        assert_eq!(chi_exact(&c5).unwrap().0, 3);
    }

    #[test]
    fn complete_graph_parameters() {
        for n in 1..=6 {
            let k = Graph::complete(n);
            assert_eq!(alpha_exact(&k).unwrap().0, 1);
            assert_eq!(omega_exact(&k).unwrap().0, n);
            assert_eq!(chi_exact(&k).unwrap().0, n);
        }
    }

    #[test]
    fn edgeless_parameters() {
        for n in 1..=6 {
            let g = Graph::empty(n);
            assert_eq!(alpha_exact(&g).unwrap().0, n);
            assert_eq!(omega_exact(&g).unwrap().0, 1);
            assert_eq!(chi_exact(&g).unwrap().0, 1);
        }
    }

    #[test]
    fn exact_matches_brute_force_on_random_graphs() {
        for seed in 0..40u64 {
            let n = 4 + (seed % 5) as usize; // 4..=8
            let g = random_graph(n, 500, seed);
            let ab = alpha_brute(&g);
            assert_eq!(alpha_exact(&g).unwrap().0, ab, "alpha mismatch seed {seed}");
            assert_eq!(
                omega_exact(&g).unwrap().0,
                alpha_brute(&g.complement()),
                "omega mismatch seed {seed}"
            );
            let cb = chi_brute(&g);
            let (chi, colouring) = chi_exact(&g).unwrap();
            assert_eq!(chi, cb, "chi mismatch seed {seed}");
            for (i, j) in g.edges() {
                assert_ne!(colouring[i], colouring[j], "invalid colouring seed {seed}");
            }
        }
    }

    #[test]
    fn alpha_witness_is_independent() {
        let g = random_graph(8, 400, 9);
        let (k, witness) = alpha_exact(&g).unwrap();
        assert_eq!(k, witness.len());
        for (a, &i) in witness.iter().enumerate() {
            for &j in &witness[a + 1..] {
                assert!(!g.adjacent(i, j));
            }
        }
    }

    #[test]
    fn complement_c5_is_labelled_pentagram() {
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        let expected = Graph::from_edges(5, &[(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]).unwrap();
        assert_eq!(comp, expected);
    }

    #[test]
    fn complement_is_involution() {
        let p3 = Graph::path(3);
        assert_eq!(p3.complement().complement(), p3);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn cartesian_k2_k2_is_c4() {
        let k2 = Graph::complete(2);
        let prod = k2.cartesian_product(&k2);
        assert_eq!(prod.n(), 4);
        assert_eq!(prod.edge_count(), 4);
        // 4-cycle has chi 2, alpha 2
        assert_eq!(chi_exact(&prod).unwrap().0, 2);
        assert_eq!(alpha_exact(&prod).unwrap().0, 2);
    }

    #[test]
    fn cartesian_identity_element() {
        let g = Graph::cycle(5);
        let one = Graph::empty(1);
        assert_eq!(g.cartesian_product(&one), g);
    }

    #[test]
    fn cartesian_edge_count_formula() {
        let g = Graph::cycle(5);
        let h = Graph::path(4);
        let prod = g.cartesian_product(&h);
        assert_eq!(
            prod.edge_count(),
            g.edge_count() * h.n() + g.n() * h.edge_count()
        );
    }

    #[test]
    fn categorical_k2_k2_two_disjoint_edges() {
        let k2 = Graph::complete(2);
        let prod = k2.categorical_product(&k2);
        assert_eq!(prod.n(), 4);
        assert_eq!(prod.edge_count(), 2);
    }

    #[test]
    fn categorical_with_edgeless_is_edgeless() {
        let g = Graph::cycle(4);
        let e = Graph::empty(3);
        assert_eq!(g.categorical_product(&e).edge_count(), 0);
    }

    #[test]
    fn categorical_k2_k3_is_c6() {
        let prod = Graph::complete(2).categorical_product(&Graph::complete(3));
        assert_eq!(prod.n(), 6);
        assert_eq!(prod.edge_count(), 6);
        assert_eq!(chi_exact(&prod).unwrap().0, 2);
        // connected 2-regular bipartite on 6 vertices is C6
        assert!((0..6).all(|v| prod.degree(v) == 2));
    }

    #[test]
    fn parse_k2() {
        let g = parse_graph("2 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn parse_edgeless() {
        let g = parse_graph("3 0\n").unwrap();
        assert_eq!(g, Graph::empty(3));
    }

    #[test]
    fn parse_rejects_loop() {
        assert!(parse_graph("2 1\n1 1\n").is_err());
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(parse_graph("2 1\n1 3\n").is_err());
    }

    #[test]
    fn parse_emit_round_trip() {
        let g = random_graph(7, 500, 3);
        let text = emit_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn iso_class_counts() {
        assert_eq!(all_graphs_up_to_iso(1).len(), 1);
        assert_eq!(all_graphs_up_to_iso(2).len(), 2);
        assert_eq!(all_graphs_up_to_iso(3).len(), 4);
        assert_eq!(all_graphs_up_to_iso(4).len(), 11);
        assert_eq!(all_graphs_up_to_iso(5).len(), 34);
    }

    #[test]
    fn alpha_equals_omega_of_complement_exhaustive() {
        for seed in 0..30u64 {
            let n = 3 + (seed % 7) as usize; // 3..=9
            let g = random_graph(n, 450, 1000 + seed);
            assert_eq!(alpha_exact(&g).unwrap().0, omega_exact(&g.complement()).unwrap().0);
        }
    }

    #[test]
    fn chi_lower_bounds() {
        for seed in 0..20u64 {
            let g = random_graph(7, 500, 2000 + seed);
            let chi = chi_exact(&g).unwrap().0;
            let omega = omega_exact(&g).unwrap().0;
            let alpha = alpha_exact(&g).unwrap().0;
            assert!(chi >= omega);
            assert!(chi * alpha >= g.n());
        }
    }

    #[test]
    fn sabidussi_classical() {
        for seed in 0..8u64 {
            let g = random_graph(4, 500, 3000 + seed);
            let h = random_graph(5, 500, 4000 + seed);
            let chi_g = chi_exact(&g).unwrap().0.max(1);
            let chi_h = chi_exact(&h).unwrap().0.max(1);
            let chi_prod = chi_exact(&g.cartesian_product(&h)).unwrap().0;
            assert_eq!(chi_prod, chi_g.max(chi_h));
        }
    }

    #[test]
    fn hedetniemi_classical_inequality() {
        for seed in 0..8u64 {
            let g = random_graph(4, 500, 5000 + seed);
            let h = random_graph(5, 500, 6000 + seed);
            let chi_g = chi_exact(&g).unwrap().0;
            let chi_h = chi_exact(&h).unwrap().0;
            let chi_prod = chi_exact(&g.categorical_product(&h)).unwrap().0;
            assert!(chi_prod <= chi_g.min(chi_h));
        }
    }

    #[test]
    fn amplified_graph_structure() {
        let g = Graph::complete(2);
        let a = g.amplified(2);
        // K2 amplified by 2: (k,i)~(l,j) iff i≠j or (i=j, k≠l) — this is K4
        assert_eq!(a, Graph::complete(4));
        let e = Graph::empty(2).amplified(2);
        // only the k≠l, i=j edges: two disjoint K2s
        assert_eq!(e.edge_count(), 2);
    }
}
