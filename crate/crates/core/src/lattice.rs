//! Lattice-point enumeration in bounded polyhedra, and minimal lattice points of
//! regions that are stable under translation by the dual cone.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::geometry::{polyhedron_vertices, Halfspace};
use crate::point::{self, dot, LatticePoint};

/// A polyhedron described by closed halfspaces with integral offsets; it has
/// the same lattice points as the halfspaces it was built from.
#[derive(Clone, Debug)]
pub(crate) struct Region {
    dim: usize,
    constraints: Vec<Halfspace>,
}

impl Region {
    pub(crate) fn new(dim: usize, halfspaces: impl IntoIterator<Item = Halfspace>) -> Region {
        let constraints = halfspaces.into_iter().map(|h| h.tightened()).collect();
        Region { dim, constraints }
    }

    pub(crate) fn push(&mut self, h: Halfspace) {
        self.constraints.push(h.tightened());
    }

    /// Adds `lo <= <normal, x> <= hi`.
    pub(crate) fn push_slab(&mut self, normal: &LatticePoint, lo: &BigInt, hi: &BigInt) {
        let n = normal.coords().to_vec();
        let neg: Vec<BigInt> = n.iter().map(|c| -c).collect();
        self.push(Halfspace::new(n, BigRational::from_integer(lo.clone()), false));
        self.push(Halfspace::new(neg, BigRational::from_integer(-hi), false));
    }

    #[cfg(test)]
    pub(crate) fn contains(&self, x: &LatticePoint) -> bool {
        self.constraints.iter().all(|h| h.contains_int(x))
    }

    /// All lattice points, in lexicographic order. The region must be bounded.
    pub(crate) fn lattice_points(&self) -> Result<Vec<LatticePoint>> {
        let mut out = Vec::new();
        self.for_each_lattice_point(|p| out.push(p))?;
        Ok(out)
    }

    pub(crate) fn for_each_lattice_point(&self, mut visit: impl FnMut(LatticePoint)) -> Result<()> {
        let vertices = polyhedron_vertices(&self.constraints, self.dim)?;
        if vertices.is_empty() {
            return Ok(());
        }
        let d = self.dim;
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for i in 0..d {
            let min = vertices.iter().map(|v| &v.coords()[i]).min().unwrap();
            let max = vertices.iter().map(|v| &v.coords()[i]).max().unwrap();
            lo.push(point::ceil(min));
            hi.push(point::floor(max));
        }
        // offsets are integral after tightening
        let rows: Vec<(Vec<BigInt>, BigInt)> =
            self.constraints.iter().map(|h| (h.normal().to_vec(), h.offset().to_integer())).collect();
        let mut prefix = Vec::with_capacity(d);
        scan(&rows, &lo, &hi, &mut prefix, &mut visit);
        Ok(())
    }
}

/// Iterates the outer coordinates over their bounding box; the last coordinate
/// runs over the exact interval cut out by the constraints.
fn scan(
    rows: &[(Vec<BigInt>, BigInt)],
    lo: &[BigInt],
    hi: &[BigInt],
    prefix: &mut Vec<BigInt>,
    visit: &mut impl FnMut(LatticePoint),
) {
    let d = lo.len();
    let k = prefix.len();
    if k + 1 < d {
        let mut x = lo[k].clone();
        while x <= hi[k] {
            prefix.push(x.clone());
            scan(rows, lo, hi, prefix, visit);
            prefix.pop();
            x += 1;
        }
        return;
    }
    let mut low = lo[k].clone();
    let mut high = hi[k].clone();
    for (normal, offset) in rows {
        let rest: BigInt = offset - dot(&normal[..k], prefix);
        let g = &normal[k];
        if g.is_positive() {
            low = low.max(ceil_div(&rest, g));
        } else if g.is_negative() {
            high = high.min(floor_div(&rest, g));
        } else if rest.is_positive() {
            return;
        }
    }
    let mut x = low;
    while x <= high {
        let mut coords = prefix.clone();
        coords.push(x.clone());
        visit(LatticePoint::new(coords));
        x += 1;
    }
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Minimal elements of the lattice points of `region ∩ σ^∨` under the order
/// `w <= w'` iff `w' - w ∈ σ^∨`.
///
/// `region` must be stable under translation by `σ^∨`. Any minimal point has the
/// form `q + Σ λ_j ρ_j` with `q` in the convex hull of the region's vertices,
/// at most `d` dual rays `ρ_j` and `0 <= λ_j < 1`, which bounds every sigma
/// pairing by the vertex maximum plus the `d` largest ray pairings.
pub(crate) fn minimal_lattice_points(
    dual_rays: &[LatticePoint],
    sigma_rays: &[LatticePoint],
    region: &[Halfspace],
) -> Result<Vec<LatticePoint>> {
    let d = sigma_rays.first().map(LatticePoint::dim).unwrap_or(0);
    let mut constraints = Region::new(d, region.iter().cloned());
    for n in sigma_rays {
        constraints.push(Halfspace::new(n.coords().to_vec(), BigRational::zero(), false));
    }
    let vertices = polyhedron_vertices(&constraints.constraints, d)?;
    if vertices.is_empty() {
        return Ok(Vec::new());
    }

    for n in sigma_rays {
        let vertex_max = vertices.iter().map(|v| v.dot_int(n.coords())).max().unwrap();
        let mut pairings: Vec<BigInt> = dual_rays.iter().map(|r| r.dot(n)).collect();
        pairings.sort_by(|a, b| b.cmp(a));
        let slack: BigInt = pairings.iter().take(d).sum();
        let bound = point::floor(&vertex_max) + slack;
        let neg: Vec<BigInt> = n.coords().iter().map(|c| -c).collect();
        constraints.push(Halfspace::new(neg, BigRational::from_integer(-bound), false));
    }

    let mut candidates: Vec<(Vec<BigInt>, LatticePoint)> = Vec::new();
    constraints.for_each_lattice_point(|p| {
        let t: Vec<BigInt> = sigma_rays.iter().map(|n| n.dot(&p)).collect();
        candidates.push((t, p));
    })?;
    Ok(minimal_by_pairings(candidates))
}

/// Given points with their sigma pairings, keeps the minimal ones. Sorted by
/// total degree first, so a point can only be dominated by one already kept.
pub(crate) fn minimal_by_pairings(mut candidates: Vec<(Vec<BigInt>, LatticePoint)>) -> Vec<LatticePoint> {
    candidates.sort_by(|(ta, pa), (tb, pb)| {
        let da: BigInt = ta.iter().sum();
        let db: BigInt = tb.iter().sum();
        da.cmp(&db).then_with(|| pa.cmp(pb))
    });
    let mut kept: Vec<(Vec<BigInt>, LatticePoint)> = Vec::new();
    for (t, p) in candidates {
        let dominated = kept.iter().any(|(tk, _)| tk.iter().zip(&t).all(|(a, b)| a <= b));
        if !dominated {
            kept.push((t, p));
        }
    }
    let mut out: Vec<LatticePoint> = kept.into_iter().map(|(_, p)| p).collect();
    out.sort();
    out
}
