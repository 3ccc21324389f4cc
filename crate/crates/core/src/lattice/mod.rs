//! Star-shaped plumbing graphs and their intersection lattices.
//!
//! Vertex ids are deterministic: the center is `0`, then each leg in input
//! order, inner (center-adjacent) vertex first. Cycles are coefficient
//! vectors over these ids.

mod cycle;
pub mod linalg;

use num_traits::{One, Zero};

pub use cycle::{ClassRep, RationalCycle};

use crate::rational::{qi, Q};
use crate::seifert::SeifertData;
use crate::{Error, Result};

pub const CENTER: usize = 0;

/// Negative-definite star-shaped plumbing graph with genus-zero vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarGraph {
    seifert: SeifertData,
    euler: Vec<i64>,
    legs: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
}

/// Hirzebruch (negative) continued fraction `p/q = [b1, ..., bk]`, `b_j >= 2`.
pub fn hirzebruch_expansion(p: i64, q: i64) -> Vec<i64> {
    assert!(0 < q && q < p, "expansion needs 0 < q < p");
    let mut out = Vec::new();
    let (mut p, mut q) = (p, q);
    while q != 0 {
        let b = crate::rational::ceil_div(p, q);
        out.push(b);
        (p, q) = (q, b * q - p);
    }
    out
}

/// Builds the plumbing graph of normalized Seifert invariants.
pub fn build_graph(sf: &SeifertData) -> Result<StarGraph> {
    sf.validate()?;
    Ok(StarGraph::from_seifert(sf))
}

impl StarGraph {
    /// Infallible for data that passed [`SeifertData::new`].
    pub fn from_seifert(sf: &SeifertData) -> Self {
        let mut euler = vec![-sf.b0()];
        let mut legs = Vec::with_capacity(sf.d());
        let mut neighbors: Vec<Vec<usize>> = vec![Vec::new()];
        for &(alpha, omega) in sf.legs() {
            let mut chain = Vec::new();
            let mut prev = CENTER;
            for b in hirzebruch_expansion(alpha, omega) {
                let v = euler.len();
                euler.push(-b);
                neighbors.push(vec![prev]);
                neighbors[prev].push(v);
                chain.push(v);
                prev = v;
            }
            legs.push(chain);
        }
        StarGraph {
            seifert: sf.clone(),
            euler,
            legs,
            neighbors,
        }
    }

    pub fn seifert(&self) -> &SeifertData {
        &self.seifert
    }

    pub fn center_index(&self) -> usize {
        CENTER
    }

    pub fn vertex_count(&self) -> usize {
        self.euler.len()
    }

    pub fn euler(&self, v: usize) -> i64 {
        self.euler[v]
    }

    pub fn eulers(&self) -> &[i64] {
        &self.euler
    }

    /// Legs as vertex chains ordered from the center outward.
    pub fn legs(&self) -> &[Vec<usize>] {
        &self.legs
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Outermost vertex of each leg, in leg order.
    pub fn end_vertices(&self) -> Vec<usize> {
        self.legs.iter().map(|c| *c.last().unwrap()).collect()
    }

    /// Entry `(E_u, E_v)` of the intersection matrix.
    pub fn intersection(&self, u: usize, v: usize) -> i64 {
        if u == v {
            self.euler[u]
        } else if self.neighbors[u].contains(&v) {
            1
        } else {
            0
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::NoSuchVertex {
                vertex: v,
                count: self.vertex_count(),
            })
        }
    }

    fn check_len(&self, l: &RationalCycle) -> Result<()> {
        if l.len() == self.vertex_count() {
            Ok(())
        } else {
            Err(Error::IndexMismatch {
                expected: self.vertex_count(),
                found: l.len(),
            })
        }
    }

    /// `(l, E_v)`; `l` must have the graph's length.
    pub fn pair_with_base(&self, l: &RationalCycle, v: usize) -> Q {
        let mut acc = l[v].clone() * qi(self.euler[v]);
        for &u in &self.neighbors[v] {
            acc += &l[u];
        }
        acc
    }

    pub fn zero_cycle(&self) -> RationalCycle {
        RationalCycle::zero(self.vertex_count())
    }

    pub fn base_cycle(&self, v: usize) -> RationalCycle {
        RationalCycle::basis(self.vertex_count(), v)
    }
}

/// The intersection pairing `(a, b) = a^T I b`.
pub fn pairing(g: &StarGraph, a: &RationalCycle, b: &RationalCycle) -> Result<Q> {
    g.check_len(a)?;
    g.check_len(b)?;
    let mut acc = Q::zero();
    for v in 0..g.vertex_count() {
        if !a[v].is_zero() {
            acc += &a[v] * g.pair_with_base(b, v);
        }
    }
    Ok(acc)
}

/// `E_v^*`, determined by `(E_v^*, E_w) = -delta_{vw}`.
pub fn dual_cycle(g: &StarGraph, v: usize) -> Result<RationalCycle> {
    g.check_vertex(v)?;
    let mut rhs = vec![Q::zero(); g.vertex_count()];
    rhs[v] = -Q::one();
    Ok(RationalCycle::from_vec(linalg::solve_star(g, rhs)?))
}

/// `Z_K = -K`, the solution of the adjunction equations
/// `(-Z_K + E_v, E_v) + 2 = 0`.
pub fn canonical_cycle(g: &StarGraph) -> RationalCycle {
    let rhs = g.euler.iter().map(|&b| qi(b + 2)).collect();
    RationalCycle::from_vec(linalg::solve_star(g, rhs).expect("negative definite graph"))
}

/// Riemann-Roch function `chi(l) = (Z_K - l, l) / 2`.
pub fn chi(g: &StarGraph, l: &RationalCycle) -> Result<Q> {
    g.check_len(l)?;
    // (Z_K, E_v) = E_v^2 + 2, so Z_K need not be solved for.
    let mut zk_l = Q::zero();
    for v in 0..g.vertex_count() {
        zk_l += &l[v] * qi(g.euler[v] + 2);
    }
    let ll = pairing(g, l, l)?;
    Ok((zk_l - ll) / qi(2))
}

pub fn class_rep(l: &RationalCycle) -> ClassRep {
    ClassRep::of(l)
}

pub fn r_of_class(c: &ClassRep) -> RationalCycle {
    c.representative()
}

/// Anti-nef on every vertex: `(l, E_v) <= 0` for all `v`.
pub fn is_antinef(g: &StarGraph, l: &RationalCycle) -> Result<bool> {
    is_antinef_on(g, l, 0..g.vertex_count())
}

/// Anti-nef restricted to a vertex subset.
pub fn is_antinef_on(
    g: &StarGraph,
    l: &RationalCycle,
    vertices: impl IntoIterator<Item = usize>,
) -> Result<bool> {
    g.check_len(l)?;
    for v in vertices {
        g.check_vertex(v)?;
        if g.pair_with_base(l, v) > Q::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `l` lies in `L'`, i.e. pairs integrally with every `E_v`.
pub fn in_dual_lattice(g: &StarGraph, l: &RationalCycle) -> Result<bool> {
    g.check_len(l)?;
    Ok((0..g.vertex_count()).all(|v| g.pair_with_base(l, v).is_integer()))
}

/// `Z_K = 0`, the ADE (rational double point) test.
pub fn is_ade(g: &StarGraph) -> bool {
    canonical_cycle(g).is_zero()
}
