//! Labeled simple graphs and the integer matrices attached to them.
//!
//! The edge sequence is part of a graph's identity: edge `i` is the `i`-th
//! column of the incidence matrix, the `i`-th vertex of the line graph, and
//! the `i`-th subdivision vertex of every merged construction.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Simple undirected graph on vertices `0..order` with an ordered edge list.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    order: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.order, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            order: g.order,
            edges: g.edges.into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, keeping edges in the given order and orientation.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGraph("order must be positive".into()));
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut seen = HashSet::with_capacity(edges.len());
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u >= order || v >= order {
                return Err(Error::InvalidGraph(format!(
                    "edge {idx} ({u},{v}) has a label outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {idx} is a self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("edge {idx} ({u},{v}) is a duplicate")));
            }
        }
        Ok(Self { order, edges })
    }

    /// Graph with vertices only.
    pub fn empty(order: usize) -> Result<Self> {
        Self::new(order, [])
    }

    /// Builds from a 0/1 symmetric adjacency matrix; edges come out in
    /// lexicographic order.
    pub fn from_adjacency(a: &IntMatrix) -> Result<Self> {
        let n = a.ensure_square()?;
        if !a.is_symmetric() {
            return Err(Error::Asymmetric);
        }
        let mut edges = Vec::new();
        for i in 0..n {
            if a[(i, i)] != 0 {
                return Err(Error::InvalidGraph(format!("nonzero diagonal at {i}")));
            }
            for j in i + 1..n {
                match a[(i, j)] {
                    0 => {}
                    1 => edges.push((i, j)),
                    x => {
                        return Err(Error::InvalidGraph(format!(
                            "adjacency entry ({i},{j}) = {x} is not 0/1"
                        )))
                    }
                }
            }
        }
        Self::new(n, edges)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    /// Edge set as normalized unordered pairs, for order-insensitive comparison.
    pub fn edge_set(&self) -> HashSet<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
    }

    /// Same vertex count and same unordered edge set under the identity labeling.
    pub fn same_edge_set(&self, other: &Graph) -> bool {
        self.order == other.order && self.edge_set() == other.edge_set()
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.order, self.order);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1;
            a[(v, u)] = 1;
        }
        a
    }

    /// Vertex-edge incidence matrix; column `j` is edge `j`.
    pub fn incidence(&self) -> IntMatrix {
        let mut b = IntMatrix::zeros(self.order, self.edges.len());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            b[(u, j)] = 1;
            b[(v, j)] = 1;
        }
        b
    }

    pub fn degree_matrix(&self) -> IntMatrix {
        let d: Vec<i64> = self.degrees().into_iter().map(|x| x as i64).collect();
        IntMatrix::diagonal(&d)
    }

    pub fn laplacian(&self) -> IntMatrix {
        let mut l = self.degree_matrix();
        for &(u, v) in &self.edges {
            l[(u, v)] = -1;
            l[(v, u)] = -1;
        }
        l
    }

    pub fn signless_laplacian(&self) -> IntMatrix {
        let mut q = self.degree_matrix();
        for &(u, v) in &self.edges {
            q[(u, v)] = 1;
            q[(v, u)] = 1;
        }
        q
    }

    pub fn matrix(&self, kind: MatrixKind) -> IntMatrix {
        match kind {
            MatrixKind::Adjacency => self.adjacency(),
            MatrixKind::Laplacian => self.laplacian(),
            MatrixKind::Signless => self.signless_laplacian(),
        }
    }

    /// Line graph: vertex `i` is edge `i`; edges listed lexicographically.
    pub fn line_graph(&self) -> Result<Graph> {
        let m = self.edges.len();
        if m == 0 {
            return Err(Error::EmptyEdgeSet);
        }
        let mut edges = Vec::new();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(m, edges)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order;
        let present = self.edge_set();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !present.contains(&(i, j)) {
                    edges.push((i, j));
                }
            }
        }
        Graph { order: n, edges }
    }

    /// `Some(r)` iff every vertex has degree `r`.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degrees();
        let r = d[0];
        d.iter().all(|&x| x == r).then_some(r)
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.neighbors();
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.order
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph {
            order: self.order + other.order,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        serde_json::from_str(s).map_err(|source| Error::Json {
            context: "graph".into(),
            source,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    Signless,
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" | "A" => Ok(Self::Adjacency),
            "laplacian" | "L" => Ok(Self::Laplacian),
            "signless" | "Q" => Ok(Self::Signless),
            _ => Err(Error::UnknownName {
                kind: "matrix kind",
                name: s.into(),
                valid: vec!["adjacency".into(), "laplacian".into(), "signless".into()],
            }),
        }
    }
}

/// Standard graph families with fixed canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_n`, edges lexicographic.
    Complete(usize),
    /// `C_n` with edges `(i, i+1)` then the closing edge `(0, n-1)`.
    Cycle(usize),
    /// `P_n` with edges `(i, i+1)`.
    Path(usize),
    /// `K_{p,q}`: parts `0..p` and `p..p+q`, edges lexicographic.
    CompleteBipartite(usize, usize),
    /// `K_{1,m}`: center `0`, edge `i-1` is `(0, i)`.
    Star(usize),
    /// `n` isolated vertices.
    Empty(usize),
    /// `t` disjoint copies of `K_{1,leaves}`, each laid out as [`Family::Star`].
    StarCopies { copies: usize, leaves: usize },
    Petersen,
    /// `C_n^k`: `i ~ j` iff the cyclic distance is at most `k`.
    CirculantPower { n: usize, k: usize },
    /// `{(i, p+i)}` inside the `K_{p,p}` labeling.
    BipartiteMatching(usize),
    /// `K_{p,p}` with the matching `{(i, p+i)}` removed.
    CrownGraph(usize),
    /// `K_4 x K_4` rook's graph on `Z4 x Z4`, vertex `4a+b`.
    Rook4x4,
    /// Shrikhande graph on `Z4 x Z4`, vertex `4a+b`.
    Shrikhande,
}

pub const FAMILY_NAMES: &[&str] = &[
    "complete:N",
    "cycle:N",
    "path:N",
    "complete_bipartite:P,Q",
    "star:M",
    "empty:N",
    "t_copies_of_star:T[,M]",
    "petersen",
    "circulant_power:N,K",
    "matching:P",
    "crown:P",
    "rook4x4",
    "shrikhande",
];

impl Family {
    pub fn build(self) -> Result<Graph> {
        let need = |ok: bool, msg: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::ParameterOutOfRange(format!("{self:?}: {msg}")))
            }
        };
        match self {
            Family::Complete(n) => {
                need(n >= 1, "n >= 1")?;
                let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                Graph::new(n, edges)
            }
            Family::Cycle(n) => {
                need(n >= 3, "cycle needs n >= 3")?;
                let edges = (0..n - 1).map(|i| (i, i + 1)).chain([(0, n - 1)]);
                Graph::new(n, edges)
            }
            Family::Path(n) => {
                need(n >= 1, "n >= 1")?;
                Graph::new(n, (0..n - 1).map(|i| (i, i + 1)))
            }
            Family::CompleteBipartite(p, q) => {
                need(p >= 1 && q >= 1, "p, q >= 1")?;
                let edges = (0..p).flat_map(|i| (0..q).map(move |j| (i, p + j)));
                Graph::new(p + q, edges)
            }
            Family::Star(m) => {
                need(m >= 1, "m >= 1")?;
                Graph::new(m + 1, (1..=m).map(|i| (0, i)))
            }
            Family::Empty(n) => {
                need(n >= 1, "n >= 1")?;
                Graph::empty(n)
            }
            Family::StarCopies { copies, leaves } => {
                need(copies >= 1 && leaves >= 1, "t, m >= 1")?;
                let star = Family::Star(leaves).build()?;
                let mut g = star.clone();
                for _ in 1..copies {
                    g = g.disjoint_union(&star);
                }
                Ok(g)
            }
            Family::Petersen => {
                // outer 5-cycle 0..5, spokes i -> i+5, inner pentagram
                let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
                edges.extend((0..5).map(|i| (i, i + 5)));
                edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
                Graph::new(10, edges)
            }
            Family::CirculantPower { n, k } => {
                need(n >= 3 && k >= 1 && 2 * k < n, "n >= 3, 1 <= k < n/2")?;
                let mut edges = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let d = (j - i).min(n - (j - i));
                        if d <= k {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(n, edges)
            }
            Family::BipartiteMatching(p) => {
                need(p >= 1, "p >= 1")?;
                Graph::new(2 * p, (0..p).map(|i| (i, p + i)))
            }
            Family::CrownGraph(p) => {
                need(p >= 1, "p >= 1")?;
                let edges = (0..p)
                    .flat_map(|i| (0..p).filter(move |&j| j != i).map(move |j| (i, p + j)));
                Graph::new(2 * p, edges)
            }
            Family::Rook4x4 => z4_squared(|da, db| da == 0 || db == 0),
            Family::Shrikhande => {
                z4_squared(|da, db| matches!((da, db), (0, 1) | (0, 3) | (1, 0) | (3, 0) | (1, 1) | (3, 3)))
            }
        }
    }
}

fn z4_squared(adjacent: impl Fn(usize, usize) -> bool) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..16 {
        for v in u + 1..16 {
            let da = (4 + v / 4 - u / 4) % 4;
            let db = (4 + v % 4 - u % 4) % 4;
            if adjacent(da, db) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(16, edges)
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name` or `name:a[,b]`, e.g. `cycle:4`, `complete_bipartite:2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::ParameterOutOfRange(format!("bad number `{a}` in `{s}`")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::ParameterOutOfRange(format!(
                    "`{name}` takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let fam = match name {
            "complete" | "K" => {
                arity(1)?;
                Family::Complete(nums[0])
            }
            "cycle" | "C" => {
                arity(1)?;
                Family::Cycle(nums[0])
            }
            "path" | "P" => {
                arity(1)?;
                Family::Path(nums[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(nums[0], nums[1])
            }
            "star" => {
                arity(1)?;
                Family::Star(nums[0])
            }
            "empty" => {
                arity(1)?;
                Family::Empty(nums[0])
            }
            "t_copies_of_star" => {
                if nums.len() == 1 {
                    Family::StarCopies {
                        copies: nums[0],
                        leaves: 2,
                    }
                } else {
                    arity(2)?;
                    Family::StarCopies {
                        copies: nums[0],
                        leaves: nums[1],
                    }
                }
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "circulant_power" => {
                arity(2)?;
                Family::CirculantPower { n: nums[0], k: nums[1] }
            }
            "matching" => {
                arity(1)?;
                Family::BipartiteMatching(nums[0])
            }
            "crown" => {
                arity(1)?;
                Family::CrownGraph(nums[0])
            }
            "rook4x4" => {
                arity(0)?;
                Family::Rook4x4
            }
            "shrikhande" => {
                arity(0)?;
                Family::Shrikhande
            }
            _ => {
                return Err(Error::UnknownName {
                    kind: "graph family",
                    name: name.into(),
                    valid: FAMILY_NAMES.iter().map(|s| s.to_string()).collect(),
                })
            }
        };
        Ok(fam)
    }
}

/// Builds a family graph from its textual spec.
pub fn make_family(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.build()
}
