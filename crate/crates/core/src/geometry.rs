//! Polyhedral cones and Newton polyhedra with exact facet descriptions.
//!
//! All polyhedra here are full-dimensional with a pointed recession cone, so the
//! relative interior is the set of points satisfying every facet strictly.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dd::{self, DdError};
use crate::error::{Error, Result};
use crate::linalg;
use crate::point::{self, check_dim, content, dot, primitive, LatticePoint, RatPoint};

/// `{x : <normal, x> >= offset}`, or `> offset` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Halfspace {
    #[serde(with = "point::int_vec_serde")]
    normal: Vec<BigInt>,
    #[serde(with = "point::rational_serde")]
    offset: BigRational,
    strict: bool,
}

impl Halfspace {
    /// Normalizes `normal` to a primitive vector (dividing the offset along).
    ///
    /// Panics on a zero normal.
    pub fn new(normal: Vec<BigInt>, offset: BigRational, strict: bool) -> Self {
        let g = content(&normal);
        assert!(!g.is_zero(), "halfspace normal must be nonzero");
        let normal = primitive(&normal);
        let offset = offset / BigRational::from_integer(g);
        Halfspace { normal, offset, strict }
    }

    pub fn from_i64s(normal: &[i64], offset: i64) -> Self {
        Halfspace::new(
            normal.iter().map(|&c| BigInt::from(c)).collect(),
            BigRational::from_integer(offset.into()),
            false,
        )
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn with_strict(&self, strict: bool) -> Halfspace {
        Halfspace { strict, ..self.clone() }
    }

    pub fn value(&self, x: &RatPoint) -> BigRational {
        x.dot_int(&self.normal)
    }

    pub fn value_int(&self, x: &LatticePoint) -> BigInt {
        dot(&self.normal, x.coords())
    }

    pub fn contains(&self, x: &RatPoint) -> bool {
        let v = self.value(x);
        if self.strict {
            v > self.offset
        } else {
            v >= self.offset
        }
    }

    pub fn contains_int(&self, x: &LatticePoint) -> bool {
        let v = BigRational::from_integer(self.value_int(x));
        if self.strict {
            v > self.offset
        } else {
            v >= self.offset
        }
    }

    /// The closed halfspace with integral offset that has the same lattice points.
    pub(crate) fn tightened(&self) -> Halfspace {
        let offset = if self.strict { point::floor(&self.offset) + BigInt::one() } else { point::ceil(&self.offset) };
        Halfspace { normal: self.normal.clone(), offset: BigRational::from_integer(offset), strict: false }
    }
}

fn var_name(i: usize, dim: usize) -> String {
    if dim <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Halfspace {
    /// Renders e.g. `-x + 4y >= 14`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dim = self.normal.len();
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = var_name(i, dim);
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
            if first {
                let sign = if c.is_negative() { "-" } else { "" };
                write!(f, "{sign}{coeff}{name}")?;
                first = false;
            } else {
                let sign = if c.is_negative() { "-" } else { "+" };
                write!(f, " {sign} {coeff}{name}")?;
            }
        }
        let op = if self.strict { ">" } else { ">=" };
        write!(f, " {op} {}", self.offset)
    }
}

/// A full-dimensional pointed rational cone, stored by its extreme rays and facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyCone {
    dim: usize,
    rays: Vec<LatticePoint>,
    facets: Vec<Halfspace>,
}

impl PolyCone {
    /// Builds the cone generated by `rays`. Rays are made primitive, deduplicated
    /// and reduced to the extreme ones.
    pub fn new(rays: &[LatticePoint]) -> Result<PolyCone> {
        let dim = rays.first().map(LatticePoint::dim).ok_or(Error::NotFullDimensional)?;
        if dim == 0 {
            return Err(Error::NotFullDimensional);
        }
        for r in rays {
            check_dim(dim, r.dim())?;
        }
        let mut gens: Vec<Vec<BigInt>> = rays.iter().filter(|r| !r.is_zero()).map(|r| primitive(r.coords())).collect();
        gens.sort();
        gens.dedup();

        let normals = dd::extreme_rays(&gens, dim).map_err(|DdError::RankDeficient| Error::NotFullDimensional)?;
        if linalg::rank_int(&normals) < dim {
            return Err(Error::NotPointed);
        }

        // a generator is extreme iff its tight facets span a hyperplane
        let extreme: Vec<LatticePoint> = gens
            .into_iter()
            .filter(|g| {
                let tight: Vec<Vec<BigInt>> = normals.iter().filter(|n| dot(n, g).is_zero()).cloned().collect();
                linalg::rank_int(&tight) + 1 == dim
            })
            .map(LatticePoint::new)
            .collect();

        let mut facets: Vec<Halfspace> =
            normals.into_iter().map(|n| Halfspace::new(n, BigRational::zero(), false)).collect();
        facets.sort();
        Ok(PolyCone { dim, rays: extreme, facets })
    }

    pub fn from_i64s(rays: &[&[i64]]) -> Result<PolyCone> {
        let pts: Vec<LatticePoint> = rays.iter().map(|r| LatticePoint::from_i64s(r)).collect();
        PolyCone::new(&pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Primitive extreme rays, sorted lexicographically.
    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    /// Facet inequalities `<n, x> >= 0`, sorted lexicographically.
    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Primitive inner facet normals, i.e. the rays of the dual cone.
    pub fn facet_normals(&self) -> Vec<LatticePoint> {
        self.facets.iter().map(|h| LatticePoint::new(h.normal.clone())).collect()
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.facets.iter().all(|h| h.contains_int(x))
    }

    pub fn contains_rat(&self, x: &RatPoint) -> bool {
        self.facets.iter().all(|h| h.contains(x))
    }

    pub fn interior_contains_rat(&self, x: &RatPoint) -> bool {
        self.facets.iter().all(|h| h.value(x).is_positive())
    }
}

/// The dual cone `{y : <x, y> >= 0 for all x in c}`.
pub fn dual_cone(c: &PolyCone) -> Result<PolyCone> {
    PolyCone::new(&c.facet_normals())
}

/// `conv(points) + recession`, with its facets and vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    points: Vec<LatticePoint>,
    recession: PolyCone,
    facets: Vec<Halfspace>,
    vertices: Vec<LatticePoint>,
}

/// Facets of `conv(points) + cone(rays)` via the homogenization
/// `cone{(1, p)} + cone{(0, r)}`; the facet `t >= 0` at infinity is dropped.
fn polyhedron_facets(points: &[Vec<BigInt>], rays: &[Vec<BigInt>], dim: usize) -> Result<Vec<Halfspace>> {
    let mut gens: Vec<Vec<BigInt>> = Vec::with_capacity(points.len() + rays.len());
    for p in points {
        let mut row = vec![BigInt::one()];
        row.extend(p.iter().cloned());
        gens.push(row);
    }
    for r in rays {
        let mut row = vec![BigInt::zero()];
        row.extend(r.iter().cloned());
        gens.push(row);
    }
    let normals = dd::extreme_rays(&gens, dim + 1).map_err(|DdError::RankDeficient| Error::NotFullDimensional)?;
    let mut facets: Vec<Halfspace> = normals
        .into_iter()
        .filter(|y| !y[1..].iter().all(Zero::is_zero))
        .map(|y| Halfspace::new(y[1..].to_vec(), BigRational::from_integer(-&y[0]), false))
        .collect();
    facets.sort();
    Ok(facets)
}

/// Builds `conv(points) + recession` and computes its irredundant facet list.
pub fn hull_plus_cone(points: &[LatticePoint], recession: &PolyCone) -> Result<NewtonPolyhedron> {
    let dim = recession.dim();
    if points.is_empty() {
        return Err(Error::NotFullDimensional);
    }
    for p in points {
        check_dim(dim, p.dim())?;
    }
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort();
    pts.dedup();

    let coords: Vec<Vec<BigInt>> = pts.iter().map(|p| p.coords().to_vec()).collect();
    let rays: Vec<Vec<BigInt>> = recession.rays().iter().map(|r| r.coords().to_vec()).collect();
    let facets = polyhedron_facets(&coords, &rays, dim)?;

    let vertices = pts
        .iter()
        .filter(|p| {
            let tight: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|h| BigRational::from_integer(h.value_int(p)) == h.offset)
                .map(|h| h.normal.clone())
                .collect();
            linalg::rank_int(&tight) == dim
        })
        .cloned()
        .collect();

    Ok(NewtonPolyhedron { points: pts, recession: recession.clone(), facets, vertices })
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.recession.dim()
    }

    /// Deduplicated generating points, sorted.
    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn recession(&self) -> &PolyCone {
        &self.recession
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }
}

/// Where a point sits relative to one facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FacetStatus {
    Strict,
    Tight,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetEvaluation {
    pub facet: Halfspace,
    #[serde(with = "point::rational_serde")]
    pub value: BigRational,
    pub status: FacetStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub point: RatPoint,
    pub relative_interior: bool,
    pub inside: bool,
    pub evaluations: Vec<FacetEvaluation>,
}

impl MembershipReport {
    /// Facets that are tight or violated, i.e. the reasons for failing a relint test.
    pub fn obstructions(&self) -> impl Iterator<Item = &FacetEvaluation> {
        self.evaluations.iter().filter(move |e| match e.status {
            FacetStatus::Strict => false,
            FacetStatus::Tight => self.relative_interior,
            FacetStatus::Violated => true,
        })
    }
}

fn evaluate(facets: &[Halfspace], x: &RatPoint, relative_interior: bool) -> MembershipReport {
    let evaluations: Vec<FacetEvaluation> = facets
        .iter()
        .map(|h| {
            let value = h.value(x);
            let status = match value.cmp(&h.offset) {
                std::cmp::Ordering::Greater => FacetStatus::Strict,
                std::cmp::Ordering::Equal => FacetStatus::Tight,
                std::cmp::Ordering::Less => FacetStatus::Violated,
            };
            FacetEvaluation { facet: h.clone(), value, status }
        })
        .collect();
    let inside = evaluations.iter().all(|e| match e.status {
        FacetStatus::Strict => true,
        FacetStatus::Tight => !relative_interior,
        FacetStatus::Violated => false,
    });
    MembershipReport { point: x.clone(), relative_interior, inside, evaluations }
}

/// Tests `x` against every facet; with `relative_interior` all inequalities must be strict.
pub fn poly_contains(p: &NewtonPolyhedron, x: &RatPoint, relative_interior: bool) -> Result<MembershipReport> {
    check_dim(p.dim(), x.dim())?;
    Ok(evaluate(&p.facets, x, relative_interior))
}

/// A convex combination witnessing that a point is interior to a polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexCertificate {
    pub points: Vec<RatPoint>,
    #[serde(with = "point::rational_vec_serde")]
    pub coefficients: Vec<BigRational>,
}

impl ConvexCertificate {
    /// Re-checks the certificate by direct arithmetic: `d+1` affinely independent
    /// points of `p`, strictly positive coefficients summing to one, combination
    /// equal to `x`.
    pub fn validate(&self, p: &NewtonPolyhedron, x: &RatPoint) -> std::result::Result<(), String> {
        let d = p.dim();
        if x.dim() != d {
            return Err("dimension mismatch".into());
        }
        if self.points.len() != d + 1 || self.coefficients.len() != d + 1 {
            return Err(format!("expected {} points and coefficients", d + 1));
        }
        if let Some(c) = self.coefficients.iter().find(|c| !c.is_positive()) {
            return Err(format!("coefficient {c} is not positive"));
        }
        let sum: BigRational = self.coefficients.iter().cloned().sum();
        if !sum.is_one() {
            return Err(format!("coefficients sum to {sum}"));
        }
        for q in &self.points {
            if q.dim() != d {
                return Err("dimension mismatch".into());
            }
            if !p.facets.iter().all(|h| h.contains(q)) {
                return Err(format!("point {q} is outside the polyhedron"));
            }
        }
        let mut combo = vec![BigRational::zero(); d];
        for (q, c) in self.points.iter().zip(&self.coefficients) {
            for (acc, qi) in combo.iter_mut().zip(q.coords()) {
                *acc += c * qi;
            }
        }
        if combo != x.coords() {
            return Err(format!("combination is {} instead of {x}", RatPoint::new(combo)));
        }
        match affinely_independent(&self.points) {
            Ok(true) => Ok(()),
            _ => Err("points are affinely dependent".into()),
        }
    }
}

/// Produces a simplex inside `p` whose barycenter is `x`.
///
/// The simplex is `x + eps * s_j` with `s_0 = -(1,...,1)` and `s_j = e_j`, and
/// `eps` is the largest step keeping every vertex inside every facet.
pub fn relint_certificate(p: &NewtonPolyhedron, x: &RatPoint) -> Result<ConvexCertificate> {
    let report = poly_contains(p, x, true)?;
    if !report.inside {
        return Err(Error::NotInterior);
    }
    let d = p.dim();
    let mut directions: Vec<Vec<BigInt>> = vec![vec![-BigInt::one(); d]];
    for j in 0..d {
        let mut e = vec![BigInt::zero(); d];
        e[j] = BigInt::one();
        directions.push(e);
    }

    let mut eps: Option<BigRational> = None;
    for h in &p.facets {
        let slack = h.value(x) - &h.offset;
        for s in &directions {
            let rate = dot(&h.normal, s);
            if rate.is_negative() {
                let bound = &slack / BigRational::from_integer(-rate);
                eps = Some(match eps {
                    Some(e) if e <= bound => e,
                    _ => bound,
                });
            }
        }
    }
    let eps = eps.unwrap_or_else(BigRational::one);

    let points: Vec<RatPoint> = directions
        .iter()
        .map(|s| {
            RatPoint::new(
                x.coords().iter().zip(s).map(|(xi, si)| xi + &eps * BigRational::from_integer(si.clone())).collect(),
            )
        })
        .collect();
    let coefficient = BigRational::new(BigInt::one(), BigInt::from(d + 1));
    Ok(ConvexCertificate { points, coefficients: vec![coefficient; d + 1] })
}

/// True iff the difference vectors from the first point are linearly independent.
pub fn affinely_independent(points: &[RatPoint]) -> Result<bool> {
    let Some(first) = points.first() else {
        return Ok(false);
    };
    for q in points {
        check_dim(first.dim(), q.dim())?;
    }
    let diffs: linalg::Matrix = points[1..].iter().map(|q| (q - first).coords().to_vec()).collect();
    Ok(linalg::rank(&diffs) == diffs.len())
}

/// Vertices of the pointed polyhedron `{x : every halfspace holds}` (strictness ignored).
///
/// Returns an empty list when the polyhedron is empty; fails with `NotPointed`
/// when the normals do not span the space.
pub(crate) fn polyhedron_vertices(halfspaces: &[Halfspace], dim: usize) -> Result<Vec<RatPoint>> {
    // <f, x> >= c  becomes  <(-c', f'), (t, x)> >= 0 after clearing denominators
    let mut rows: Vec<Vec<BigInt>> = vec![{
        let mut t = vec![BigInt::zero(); dim + 1];
        t[0] = BigInt::one();
        t
    }];
    for h in halfspaces {
        let den = h.offset.denom().clone();
        let mut row = vec![-h.offset.numer().clone()];
        row.extend(h.normal.iter().map(|c| c * &den));
        rows.push(row);
    }
    let rays = dd::extreme_rays(&rows, dim + 1).map_err(|DdError::RankDeficient| Error::NotPointed)?;
    let mut vertices: Vec<RatPoint> = rays
        .into_iter()
        .filter(|y| y[0].is_positive())
        .map(|y| {
            let t = BigRational::from_integer(y[0].clone());
            RatPoint::new(y[1..].iter().map(|c| BigRational::from_integer(c.clone()) / &t).collect())
        })
        .collect();
    vertices.sort();
    Ok(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LatticePoint {
        LatticePoint::from_i64s(c)
    }

    fn sigma3() -> PolyCone {
        PolyCone::from_i64s(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 1]]).unwrap()
    }

    #[test]
    fn halfspace_normalizes_and_renders() {
        let h = Halfspace::new(vec![2.into(), (-8).into(), 0.into()], BigRational::from_integer((-28).into()), false);
        assert_eq!(h.normal(), &[BigInt::from(1), BigInt::from(-4), BigInt::from(0)]);
        assert_eq!(h.to_string(), "x - 4y >= -14");
        assert_eq!(Halfspace::from_i64s(&[-1, 2, 2], 6).to_string(), "-x + 2y + 2z >= 6");
        assert_eq!(Halfspace::from_i64s(&[1, 0, 0, 3], 1).to_string(), "x1 + 3x4 >= 1");
    }

    #[test]
    fn tightening_strict_and_fractional_offsets() {
        let h = Halfspace::new(vec![1.into()], BigRational::new(5.into(), 2.into()), true);
        assert_eq!(h.tightened().offset(), &BigRational::from_integer(3.into()));
        let h = Halfspace::new(vec![1.into()], BigRational::from_integer(2.into()), true);
        assert_eq!(h.tightened().offset(), &BigRational::from_integer(3.into()));
        let h = Halfspace::new(vec![1.into()], BigRational::new((-1).into(), 3.into()), false);
        assert_eq!(h.tightened().offset(), &BigRational::zero());
    }

    #[test]
    fn cone_rejects_degenerate_input() {
        assert_eq!(PolyCone::from_i64s(&[&[1, 0, 0], &[0, 1, 0]]), Err(Error::NotFullDimensional));
        assert_eq!(PolyCone::from_i64s(&[&[1, 0], &[-1, 0], &[0, 1]]), Err(Error::NotPointed));
        assert_eq!(
            PolyCone::from_i64s(&[&[1, 0], &[0, 1, 0]]).unwrap_err(),
            Error::DimensionMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn cone_drops_interior_generators() {
        let c = PolyCone::from_i64s(&[&[1, 0], &[2, 2], &[0, 3], &[1, 1]]).unwrap();
        assert_eq!(c.rays(), &[lp(&[0, 1]), lp(&[1, 0])]);
    }

    #[test]
    fn one_dimensional_cone() {
        let c = PolyCone::from_i64s(&[&[3]]).unwrap();
        assert_eq!(c.rays(), &[lp(&[1])]);
        assert_eq!(dual_cone(&c).unwrap().rays(), &[lp(&[1])]);
    }

    #[test]
    fn dual_of_example_cone() {
        let dual = dual_cone(&sigma3()).unwrap();
        assert_eq!(dual.rays(), &[lp(&[-1, 2, 0]), lp(&[0, 0, 1]), lp(&[2, -1, 0])]);
        assert_eq!(dual_cone(&dual).unwrap(), sigma3());
    }

    #[test]
    fn vertices_of_unit_square() {
        let hs = vec![
            Halfspace::from_i64s(&[1, 0], 0),
            Halfspace::from_i64s(&[0, 1], 0),
            Halfspace::from_i64s(&[-1, 0], -1),
            Halfspace::from_i64s(&[0, -1], -1),
        ];
        let v = polyhedron_vertices(&hs, 2).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.contains(&RatPoint::from_ratios(&[(1, 1), (1, 1)])));
    }

    #[test]
    fn vertices_of_empty_region() {
        let hs = vec![
            Halfspace::from_i64s(&[1, 0], 2),
            Halfspace::from_i64s(&[-1, 0], -1),
            Halfspace::from_i64s(&[0, 1], 0),
        ];
        assert!(polyhedron_vertices(&hs, 2).unwrap().is_empty());
    }

    #[test]
    fn newton_vertices_skip_interior_generators() {
        let orthant = PolyCone::from_i64s(&[&[1, 0], &[0, 1]]).unwrap();
        let n = hull_plus_cone(&[lp(&[2, 0]), lp(&[0, 2]), lp(&[1, 1]), lp(&[3, 3])], &orthant).unwrap();
        assert_eq!(n.vertices(), &[lp(&[0, 2]), lp(&[2, 0])]);
        assert_eq!(n.facets().len(), 3);
    }

    #[test]
    fn certificate_rejects_boundary_points() {
        let orthant = PolyCone::from_i64s(&[&[1, 0], &[0, 1]]).unwrap();
        let n = hull_plus_cone(&[lp(&[0, 0])], &orthant).unwrap();
        let x = RatPoint::from_ratios(&[(0, 1), (1, 1)]);
        assert_eq!(relint_certificate(&n, &x), Err(Error::NotInterior));
    }

    #[test]
    fn membership_obstructions_listed() {
        let orthant = PolyCone::from_i64s(&[&[1, 0], &[0, 1]]).unwrap();
        let n = hull_plus_cone(&[lp(&[2, 0]), lp(&[0, 2])], &orthant).unwrap();
        let r = poly_contains(&n, &lp(&[1, 1]).to_rat(), true).unwrap();
        assert!(!r.inside);
        let obs: Vec<_> = r.obstructions().collect();
        assert_eq!(obs.len(), 1);
        assert_eq!(obs[0].facet, Halfspace::from_i64s(&[1, 1], 2));
        assert_eq!(obs[0].status, FacetStatus::Tight);
        assert!(poly_contains(&n, &lp(&[1, 1]).to_rat(), false).unwrap().inside);
    }
}
