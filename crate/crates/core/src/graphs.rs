//! Small bipartite regular graphs that attain the bipartite order bound.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bounds::{m_bound, Value};
use crate::eigen::SymMatrix;
use crate::error::{Error, Result};
use crate::gfpoly::is_prime;
use crate::poly::{rat, rat_to_f64};
use crate::theta::Theta;

/// Tolerance for comparing computed eigenvalues.
pub const SPECTRUM_TOL: f64 = 1e-8;

/// A connected regular bipartite graph with a fixed 2-colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    adjacency: Vec<Vec<usize>>,
    part: Vec<u8>,
}

impl BipartiteGraph {
    /// Builds from an edge list, checking simplicity, regularity,
    /// connectivity and bipartiteness.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidGraph(format!("bad edge ({}, {})", u, v)));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({}, {})", u, v)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for a in adjacency.iter_mut() {
            a.sort_unstable();
        }
        if n == 0 {
            return Err(Error::InvalidGraph("empty graph".to_string()));
        }
        let k = adjacency[0].len();
        if adjacency.iter().any(|a| a.len() != k) {
            return Err(Error::InvalidGraph("not regular".to_string()));
        }
        let mut part = alloc::vec![u8::MAX; n];
        part[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                if part[v] == u8::MAX {
                    part[v] = 1 - part[u];
                    queue.push_back(v);
                } else if part[v] == part[u] {
                    return Err(Error::InvalidGraph("not bipartite".to_string()));
                }
            }
        }
        if part.contains(&u8::MAX) {
            return Err(Error::InvalidGraph("not connected".to_string()));
        }
        Ok(Self { adjacency, part })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self) -> usize {
        self.adjacency[0].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn part(&self) -> &[u8] {
        &self.part
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, a) in self.adjacency.iter().enumerate() {
            for &v in a {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency eigenvalues, descending.
    pub fn spectrum(&self) -> Vec<f64> {
        let mut m = SymMatrix::zeros(self.n());
        for (u, v) in self.edges() {
            m.set(u, v, 1.0);
        }
        m.eigenvalues()
    }

    pub fn second_eigenvalue(&self) -> f64 {
        self.spectrum()[1]
    }

    fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = alloc::vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> usize {
        (0..self.n())
            .map(|s| self.distances_from(s).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Length of a shortest cycle; `usize::MAX` for a forest.
    pub fn girth(&self) -> usize {
        let mut best = usize::MAX;
        for s in 0..self.n() {
            let mut dist = alloc::vec![usize::MAX; self.n()];
            let mut parent = alloc::vec![usize::MAX; self.n()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        best
    }
}

/// Cycle on `n` vertices, `n` even and at least 4.
pub fn cycle(n: usize) -> Result<BipartiteGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidGraph(format!("cycle length must be even and >= 4, got {}", n)));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    BipartiteGraph::from_edges(n, &edges)
}

pub fn complete_bipartite(k: usize) -> Result<BipartiteGraph> {
    if k < 1 {
        return Err(Error::InvalidGraph("K_{0,0}".to_string()));
    }
    let edges: Vec<_> = (0..k).flat_map(|i| (0..k).map(move |j| (i, k + j))).collect();
    BipartiteGraph::from_edges(2 * k, &edges)
}

/// Point-block incidence graph of the development of `diffs` modulo `v`:
/// point `i` lies on block `j` iff `i - j` is in `diffs`.
pub fn design_incidence(diffs: &[u64], v: u64) -> Result<BipartiteGraph> {
    if v < 2 || diffs.is_empty() {
        return Err(Error::InvalidGraph("empty design".to_string()));
    }
    let mut ds: Vec<u64> = diffs.iter().map(|d| d % v).collect();
    ds.sort_unstable();
    ds.dedup();
    if ds.len() != diffs.len() {
        return Err(Error::InvalidGraph("repeated residues in difference set".to_string()));
    }
    let n = v as usize;
    let edges: Vec<_> = (0..v)
        .flat_map(|j| ds.iter().map(move |d| (((j + d) % v) as usize, n + j as usize)))
        .collect();
    BipartiteGraph::from_edges(2 * n, &edges)
}

/// Points of `GF(q)^2` against the non-vertical lines `y = m x + b`.
pub fn affine_minus_class(q: u64) -> Result<BipartiteGraph> {
    if !is_prime(q) {
        return Err(Error::NonPrimeQ(q));
    }
    let qq = (q * q) as usize;
    let mut edges = Vec::with_capacity(qq * q as usize);
    for m in 0..q {
        for b in 0..q {
            let line = qq + (m * q + b) as usize;
            for x in 0..q {
                let y = (m * x + b) % q;
                edges.push(((x * q + y) as usize, line));
            }
        }
    }
    BipartiteGraph::from_edges(2 * qq, &edges)
}

/// The 3-cube.
pub fn cube() -> Result<BipartiteGraph> {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::from_edges(8, &edges)
}

pub fn heawood() -> Result<BipartiteGraph> {
    design_incidence(&[1, 2, 4], 7)
}

pub fn pappus() -> Result<BipartiteGraph> {
    affine_minus_class(3)
}

/// Duads of a 6-set against synthemes (perfect matchings of the 6-set),
/// joined by containment.
pub fn tutte_coxeter() -> Result<BipartiteGraph> {
    let mut duads = Vec::new();
    for a in 0..6u8 {
        for b in (a + 1)..6 {
            duads.push((a, b));
        }
    }
    let mut synthemes: Vec<[(u8, u8); 3]> = Vec::new();
    for &(a, b) in duads.iter().filter(|d| d.0 == 0) {
        let rest: Vec<u8> = (0..6).filter(|&x| x != a && x != b).collect();
        for i in 1..4 {
            let p = (rest[0], rest[i]);
            let q: Vec<u8> = rest[1..].iter().copied().filter(|&x| x != rest[i]).collect();
            synthemes.push([(a, b), p, (q[0], q[1])]);
        }
    }
    let mut edges = Vec::new();
    for (s, syn) in synthemes.iter().enumerate() {
        for pair in syn {
            let d = duads.iter().position(|x| x == pair).expect("duad");
            edges.push((d, 15 + s));
        }
    }
    BipartiteGraph::from_edges(30, &edges)
}

/// Constructor names with their integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnownGraph {
    Cycle(usize),
    CompleteBipartite(usize),
    Design { modulus: u64, diffs: Vec<u64> },
    AffineMinusClass(u64),
    Heawood,
    TutteCoxeter,
    Pappus,
    Cube,
}

impl KnownGraph {
    /// Parses `heawood`, `tutte_coxeter`, `pappus`, `cube`, `cycle:N`,
    /// `complete_bipartite:K`, `affine_minus_class:Q` or `design:V:a,b,...`.
    pub fn parse(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| unknown());
        let mut it = s.trim().splitn(3, ':');
        let head = it.next().unwrap_or("").to_ascii_lowercase().replace('-', "_");
        let arg = it.next();
        let rest = it.next();
        Ok(match (head.as_str(), arg, rest) {
            ("heawood", None, None) => KnownGraph::Heawood,
            ("tutte_coxeter", None, None) => KnownGraph::TutteCoxeter,
            ("pappus", None, None) => KnownGraph::Pappus,
            ("cube", None, None) | ("q3", None, None) => KnownGraph::Cube,
            ("cycle", Some(a), None) => KnownGraph::Cycle(num(a)? as usize),
            ("complete_bipartite", Some(a), None) => KnownGraph::CompleteBipartite(num(a)? as usize),
            ("affine_minus_class", Some(a), None) => KnownGraph::AffineMinusClass(num(a)?),
            ("design", Some(v), Some(ds)) => KnownGraph::Design {
                modulus: num(v)?,
                diffs: ds.split(',').map(num).collect::<Result<_>>()?,
            },
            _ => return Err(unknown()),
        })
    }

    pub fn build(&self) -> Result<BipartiteGraph> {
        match self {
            KnownGraph::Cycle(n) => cycle(*n),
            KnownGraph::CompleteBipartite(k) => complete_bipartite(*k),
            KnownGraph::Design { modulus, diffs } => design_incidence(diffs, *modulus),
            KnownGraph::AffineMinusClass(q) => affine_minus_class(*q),
            KnownGraph::Heawood => heawood(),
            KnownGraph::TutteCoxeter => tutte_coxeter(),
            KnownGraph::Pappus => pappus(),
            KnownGraph::Cube => cube(),
        }
    }
}

pub fn build_known(name: &str) -> Result<BipartiteGraph> {
    KnownGraph::parse(name)?.build()
}

/// A graph expected to meet `M(k, d+1, c)` with second eigenvalue `sqrt(theta_sq)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Table1Entry {
    pub name: String,
    pub graph: KnownGraph,
    pub k: u64,
    pub d: usize,
    pub c: u64,
    pub theta_sq: i64,
}

impl Table1Entry {
    pub fn theta(&self) -> Theta {
        Theta::from_square(rat(self.theta_sq))
    }

    /// `(t, c)` of the certificate that proves the bound for this row. For
    /// diameter 2 the graph sits at the upper end of the `t = 4` interval.
    pub fn certificate_params(&self) -> (usize, u64) {
        if self.d == 2 {
            (4, self.k)
        } else {
            (self.d + 1, self.c)
        }
    }
}

/// The rows checked by construction.
pub fn table1_entries() -> Vec<Table1Entry> {
    let row = |name: &str, graph, k, d, c, theta_sq| Table1Entry {
        name: name.to_string(),
        graph,
        k,
        d,
        c,
        theta_sq,
    };
    let mut v = alloc::vec![row("C6", KnownGraph::Cycle(6), 2, 3, 1, 1)];
    for k in 3..=6 {
        v.push(row(&format!("K{},{}", k, k), KnownGraph::CompleteBipartite(k), k as u64, 2, 1, 0));
    }
    v.extend([
        row("Q3", KnownGraph::Cube, 3, 3, 2, 1),
        row("Heawood", KnownGraph::Heawood, 3, 3, 1, 2),
        row(
            "PG(2,3)",
            KnownGraph::Design {
                modulus: 13,
                diffs: alloc::vec![0, 1, 3, 9],
            },
            4,
            3,
            1,
            3,
        ),
        row(
            "biplane(11,5,2)",
            KnownGraph::Design {
                modulus: 11,
                diffs: alloc::vec![1, 3, 4, 5, 9],
            },
            5,
            3,
            2,
            3,
        ),
        row("Pappus", KnownGraph::Pappus, 3, 4, 2, 3),
        row("AG(2,5)-class", KnownGraph::AffineMinusClass(5), 5, 4, 4, 5),
        row("Tutte-Coxeter", KnownGraph::TutteCoxeter, 3, 4, 1, 4),
    ]);
    v
}

/// Measured parameters of a built graph against its row.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphReport {
    pub name: String,
    pub k: u64,
    pub n: usize,
    pub lambda2: f64,
    pub girth: usize,
    pub diameter: usize,
    pub bound: u64,
    pub order_matches: bool,
    pub theta_matches: bool,
    pub girth_ok: bool,
    pub matches_bound: bool,
}

pub fn verify_table1(entry: &Table1Entry) -> Result<GraphReport> {
    let g = entry.graph.build()?;
    let bound = match m_bound(entry.k, entry.d + 1, &Value::int(entry.c as i64))? {
        Value::Exact(q) if q.is_integer() => rat_to_f64(&q) as u64,
        other => {
            return Err(Error::InvalidGraph(format!("non-integral bound {:?} for {}", other, entry.name)));
        }
    };
    let lambda2 = g.second_eigenvalue();
    let girth = g.girth();
    let diameter = g.diameter();
    let order_matches = g.n() as u64 == bound && g.degree() as u64 == entry.k && diameter == entry.d;
    let theta_matches = (lambda2 - entry.theta().value()).abs() < SPECTRUM_TOL;
    let girth_ok = girth + 2 >= 2 * diameter;
    Ok(GraphReport {
        name: entry.name.clone(),
        k: entry.k,
        n: g.n(),
        lambda2,
        girth,
        diameter,
        bound,
        order_matches,
        theta_matches,
        girth_ok,
        matches_bound: order_matches && theta_matches && girth_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < SPECTRUM_TOL
    }

    #[test]
    fn basic_invariants() {
        let c6 = cycle(6).unwrap();
        assert_eq!((c6.n(), c6.degree(), c6.girth(), c6.diameter()), (6, 2, 6, 3));
        assert!(close(c6.second_eigenvalue(), 1.0));
        let h = heawood().unwrap();
        assert_eq!((h.n(), h.girth(), h.diameter()), (14, 6, 3));
        let tc = tutte_coxeter().unwrap();
        assert_eq!((tc.n(), tc.degree(), tc.girth(), tc.diameter()), (30, 3, 8, 4));
        let p = pappus().unwrap();
        assert_eq!((p.n(), p.degree()), (18, 3));
        assert!(close(p.second_eigenvalue(), 3f64.sqrt()));
    }

    #[test]
    fn spectra() {
        let s = complete_bipartite(3).unwrap().spectrum();
        assert!(close(s[0], 3.0) && close(s[5], -3.0));
        assert!(s[1..5].iter().all(|x| x.abs() < SPECTRUM_TOL));
        let s = tutte_coxeter().unwrap().spectrum();
        let count = |v: f64| s.iter().filter(|x| (*x - v).abs() < 1e-8).count();
        assert_eq!((count(3.0), count(2.0), count(0.0), count(-2.0)), (1, 9, 10, 9));
        let s = heawood().unwrap().spectrum();
        assert_eq!(s.iter().filter(|x| close(**x, 2f64.sqrt())).count(), 6);
    }

    #[test]
    fn parsing() {
        assert_eq!(KnownGraph::parse("cycle:8").unwrap(), KnownGraph::Cycle(8));
        assert_eq!(
            KnownGraph::parse("design:7:1,2,4").unwrap(),
            KnownGraph::Design {
                modulus: 7,
                diffs: alloc::vec![1, 2, 4]
            }
        );
        assert_eq!(KnownGraph::parse("petersen"), Err(Error::UnknownName("petersen".into())));
        assert_eq!(build_known("affine_minus_class:4"), Err(Error::NonPrimeQ(4)));
        assert_eq!(build_known("design:7:1,2,4").unwrap(), heawood().unwrap());
    }

    #[test]
    fn rows_match() {
        for e in table1_entries() {
            let r = verify_table1(&e).unwrap();
            assert!(r.matches_bound, "{:?}", r);
        }
    }
}
