//! The (H1, H2)-merged subdivision graph and its named special cases.
//!
//! Vertex labels of every construction: `0..n` are the vertices of `G` in
//! order, `n + i` is the vertex inserted into edge `i` of `G`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntMatrix;

/// `(G, H1, H2)` with `|H1| = |V(G)|` and `|H2| = |E(G)|`.
#[derive(Debug, Clone)]
pub struct MergedTriple {
    pub g: Graph,
    pub h1: Graph,
    pub h2: Graph,
}

impl MergedTriple {
    pub fn new(g: Graph, h1: Graph, h2: Graph) -> Result<Self> {
        let t = Self { g, h1, h2 };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        if self.h1.order() != self.g.order() {
            return Err(Error::OrderMismatch {
                what: "H1 vs vertices of G",
                expected: self.g.order(),
                found: self.h1.order(),
            });
        }
        if self.h2.order() != self.g.size() {
            return Err(Error::OrderMismatch {
                what: "H2 vs edges of G",
                expected: self.g.size(),
                found: self.h2.order(),
            });
        }
        Ok(())
    }
}

/// Blocks of the Laplacian of a merged subdivision graph:
/// `[[L(H1)+D(G), -B(G)], [-B(G)^T, L(H2)+2I]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedLaplacianBlocks {
    pub top_left: IntMatrix,
    pub top_right: IntMatrix,
    pub bottom_right: IntMatrix,
}

impl MergedLaplacianBlocks {
    pub fn assemble(&self) -> IntMatrix {
        IntMatrix::block(
            &self.top_left,
            &self.top_right,
            &self.top_right.transpose(),
            &self.bottom_right,
        )
        .expect("block shapes are fixed by construction")
    }
}

pub fn merged_subdivision(t: &MergedTriple) -> Result<Graph> {
    t.check()?;
    let n = t.g.order();
    let mut edges = Vec::with_capacity(2 * t.g.size() + t.h1.size() + t.h2.size());
    for (i, &(u, v)) in t.g.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    edges.extend(t.h1.edges().iter().copied());
    edges.extend(t.h2.edges().iter().map(|&(a, b)| (n + a, n + b)));
    Graph::new(n + t.g.size(), edges)
}

pub fn merged_laplacian_blocks(t: &MergedTriple) -> Result<MergedLaplacianBlocks> {
    t.check()?;
    let m = t.g.size();
    let top_left = t.h1.laplacian().add(&t.g.degree_matrix())?;
    let top_right = t.g.incidence().scale(-1);
    let bottom_right = t.h2.laplacian().add(&IntMatrix::identity(m).scale(2))?;
    Ok(MergedLaplacianBlocks {
        top_left,
        top_right,
        bottom_right,
    })
}

/// Which graph is merged onto a vertex class, expressed relative to `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    /// Edgeless graph.
    Empty,
    /// Complete graph.
    Complete,
    /// `G` itself (only meaningful on the original vertices).
    Base,
    /// Complement of `G`.
    BaseComplement,
    /// Line graph of `G` (only on the subdivision vertices).
    Line,
    /// Complement of the line graph.
    LineComplement,
    /// A caller-supplied graph.
    Given,
}

impl Part {
    pub fn resolve(self, g: &Graph, order: usize, given: Option<&Graph>) -> Result<Graph> {
        Ok(match self {
            Part::Empty => Graph::empty(order)?,
            Part::Complete => Graph::empty(order)?.complement(),
            Part::Base => g.clone(),
            Part::BaseComplement => g.complement(),
            Part::Line => g.line_graph()?,
            Part::LineComplement => g.line_graph()?.complement(),
            Part::Given => given
                .cloned()
                .ok_or_else(|| Error::ParameterOutOfRange("operation needs a second graph".into()))?,
        })
    }
}

/// Named unary (and the one binary) specializations of the merged construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedOp {
    Subdivision,
    RGraph,
    Central,
    QGraph,
    Total,
    Quasitotal,
    Overlay,
    PointCompleteSubdivision,
    QComplemented,
    TotalComplemented,
    QuasitotalComplemented,
    CompleteQComplemented,
    CompleteSubdivision,
    CompleteRGraph,
    CompleteCentral,
    FullyCompleteSubdivision,
}

impl NamedOp {
    pub const ALL: [NamedOp; 16] = [
        NamedOp::Subdivision,
        NamedOp::RGraph,
        NamedOp::Central,
        NamedOp::QGraph,
        NamedOp::Total,
        NamedOp::Quasitotal,
        NamedOp::Overlay,
        NamedOp::PointCompleteSubdivision,
        NamedOp::QComplemented,
        NamedOp::TotalComplemented,
        NamedOp::QuasitotalComplemented,
        NamedOp::CompleteQComplemented,
        NamedOp::CompleteSubdivision,
        NamedOp::CompleteRGraph,
        NamedOp::CompleteCentral,
        NamedOp::FullyCompleteSubdivision,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedOp::Subdivision => "subdivision",
            NamedOp::RGraph => "r_graph",
            NamedOp::Central => "central",
            NamedOp::QGraph => "q_graph",
            NamedOp::Total => "total",
            NamedOp::Quasitotal => "quasitotal",
            NamedOp::Overlay => "overlay",
            NamedOp::PointCompleteSubdivision => "point_complete_subdivision",
            NamedOp::QComplemented => "q_complemented",
            NamedOp::TotalComplemented => "total_complemented",
            NamedOp::QuasitotalComplemented => "quasitotal_complemented",
            NamedOp::CompleteQComplemented => "complete_q_complemented",
            NamedOp::CompleteSubdivision => "complete_subdivision",
            NamedOp::CompleteRGraph => "complete_r_graph",
            NamedOp::CompleteCentral => "complete_central",
            NamedOp::FullyCompleteSubdivision => "fully_complete_subdivision",
        }
    }

    /// The `(H1, H2)` pair this operation merges onto `S(G)`.
    pub fn parts(self) -> (Part, Part) {
        use Part::*;
        match self {
            NamedOp::Subdivision => (Empty, Empty),
            NamedOp::RGraph => (Base, Empty),
            NamedOp::Central => (BaseComplement, Empty),
            NamedOp::QGraph => (Empty, Line),
            NamedOp::Total => (Base, Line),
            NamedOp::Quasitotal => (BaseComplement, Line),
            NamedOp::Overlay => (Given, Line),
            NamedOp::PointCompleteSubdivision => (Complete, Empty),
            NamedOp::QComplemented => (Empty, LineComplement),
            NamedOp::TotalComplemented => (Base, LineComplement),
            NamedOp::QuasitotalComplemented => (BaseComplement, LineComplement),
            NamedOp::CompleteQComplemented => (Complete, LineComplement),
            NamedOp::CompleteSubdivision => (Empty, Complete),
            NamedOp::CompleteRGraph => (Base, Complete),
            NamedOp::CompleteCentral => (BaseComplement, Complete),
            NamedOp::FullyCompleteSubdivision => (Complete, Complete),
        }
    }

    pub fn needs_second_graph(self) -> bool {
        self == NamedOp::Overlay
    }

    pub fn triple(self, g: &Graph, h: Option<&Graph>) -> Result<MergedTriple> {
        let (p1, p2) = self.parts();
        let h1 = p1.resolve(g, g.order(), h)?;
        let h2 = if g.size() == 0 {
            // S(G) of an edgeless graph has no subdivision vertices
            return Err(Error::EmptyEdgeSet);
        } else {
            p2.resolve(g, g.size(), None)?
        };
        MergedTriple::new(g.clone(), h1, h2)
    }

    pub fn apply(self, g: &Graph, h: Option<&Graph>) -> Result<Graph> {
        merged_subdivision(&self.triple(g, h)?)
    }
}

impl fmt::Display for NamedOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NamedOp::ALL
            .iter()
            .copied()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "operation",
                name: s.into(),
                valid: NamedOp::ALL.iter().map(|op| op.name().to_string()).collect(),
            })
    }
}

/// `named_op(name, G [, H])`.
pub fn named_op(name: &str, g: &Graph, h: Option<&Graph>) -> Result<Graph> {
    name.parse::<NamedOp>()?.apply(g, h)
}
