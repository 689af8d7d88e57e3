//! Brute-force reference computations in machine integers, written without the
//! double description code or the lattice enumeration of `toricmult`.
//!
//! Facets come from all hyperplanes through `d - 1` generators; minimal lattice
//! points come from a full box scan tested against a brute-force Hilbert basis.
//! Everything here is meant for small instances only.

pub mod gen;

use itertools::Itertools;
use toricmult::{LatticePoint, MonomialIdeal, ToricRing};

pub type Vector = Vec<i128>;

pub fn to_vector(p: &LatticePoint) -> Vector {
    p.to_i64s().expect("oracle inputs fit in i64").into_iter().map(i128::from).collect()
}

pub fn to_point(v: &[i128]) -> LatticePoint {
    let coords: Vec<i64> = v.iter().map(|&c| i64::try_from(c).expect("fits in i64")).collect();
    LatticePoint::from_i64s(&coords)
}

pub fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn primitive(v: &[i128]) -> Vector {
    let g = v.iter().fold(0, |g, &c| gcd(g, c));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|c| c / g).collect()
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vector]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vector> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// Generalized cross product of `d - 1` vectors in dimension `d`: orthogonal to
/// all of them, and zero exactly when they are dependent.
pub fn cross(vectors: &[Vector], d: usize) -> Vector {
    (0..d)
        .map(|k| {
            let minor: Vec<Vector> = vectors
                .iter()
                .map(|v| v.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &x)| x).collect())
                .collect();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sign * det(&minor)
        })
        .collect()
}

/// Primitive inward facet normals of the full-dimensional cone spanned by `gens`.
pub fn cone_facets(gens: &[Vector], d: usize) -> Vec<Vector> {
    if d == 1 {
        let pos = gens.iter().any(|g| g[0] > 0);
        let neg = gens.iter().any(|g| g[0] < 0);
        return match (pos, neg) {
            (true, false) => vec![vec![1]],
            (false, true) => vec![vec![-1]],
            _ => Vec::new(),
        };
    }
    let mut out: Vec<Vector> = gens
        .iter()
        .cloned()
        .combinations(d - 1)
        .filter_map(|subset| {
            let n = cross(&subset, d);
            if n.iter().all(|&c| c == 0) {
                return None;
            }
            let values: Vec<i128> = gens.iter().map(|g| dot(g, &n)).collect();
            if values.iter().all(|&v| v >= 0) {
                Some(primitive(&n))
            } else if values.iter().all(|&v| v <= 0) {
                Some(primitive(&n.iter().map(|c| -c).collect::<Vector>()))
            } else {
                None
            }
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Facets `f·x >= c` of `conv(points) + cone(rays)`, from the homogenized cone.
pub fn polyhedron_facets(points: &[Vector], rays: &[Vector], d: usize) -> Vec<(Vector, i128)> {
    let lifted: Vec<Vector> = points
        .iter()
        .map(|p| std::iter::once(1).chain(p.iter().copied()).collect())
        .chain(rays.iter().map(|r| std::iter::once(0).chain(r.iter().copied()).collect()))
        .collect();
    let mut out: Vec<(Vector, i128)> = cone_facets(&lifted, d + 1)
        .into_iter()
        .filter(|n| n[1..].iter().any(|&c| c != 0))
        .map(|n| (n[1..].to_vec(), -n[0]))
        .collect();
    out.sort();
    out
}

/// A small toric ring described by brute-force data.
#[derive(Clone, Debug)]
pub struct OracleRing {
    pub d: usize,
    pub dual_rays: Vec<Vector>,
    pub sigma_rays: Vec<Vector>,
}

/// A rational point `num / den` with `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: Vector,
    pub den: i128,
}

impl OracleRing {
    pub fn new(dual_rays: &[Vector]) -> OracleRing {
        let d = dual_rays[0].len();
        let sigma_rays = cone_facets(dual_rays, d);
        // extreme rays of the dual cone are the facets of sigma
        let dual_rays = cone_facets(&sigma_rays, d);
        OracleRing { d, dual_rays, sigma_rays }
    }

    pub fn of(ring: &ToricRing) -> OracleRing {
        let rays: Vec<Vector> = ring.dual_rays().iter().map(to_vector).collect();
        OracleRing::new(&rays)
    }

    pub fn in_semigroup(&self, w: &[i128]) -> bool {
        self.sigma_rays.iter().all(|n| dot(w, n) >= 0)
    }

    pub fn pairings(&self, w: &[i128]) -> Vector {
        self.sigma_rays.iter().map(|n| dot(w, n)).collect()
    }

    fn independent_sigma_rays(&self) -> (Vec<Vector>, i128) {
        self.sigma_rays
            .iter()
            .cloned()
            .combinations(self.d)
            .map(|m| {
                let dt = det(&m);
                (m, dt)
            })
            .find(|(_, dt)| *dt != 0)
            .expect("sigma is full-dimensional")
    }

    /// `u0` with `<u0, n_i> = 1` for every sigma ray, by Cramer's rule on a
    /// basis of rays, then checked against all rays.
    pub fn canonical_shift(&self) -> Option<Fraction> {
        let (m, dt) = self.independent_sigma_rays();
        let num: Vector = (0..self.d)
            .map(|k| {
                let replaced: Vec<Vector> = m
                    .iter()
                    .map(|row| row.iter().enumerate().map(|(j, &x)| if j == k { 1 } else { x }).collect())
                    .collect();
                det(&replaced)
            })
            .collect();
        let (num, den) = if dt < 0 { (num.iter().map(|c| -c).collect(), -dt) } else { (num, dt) };
        let g = num.iter().fold(den, |g, &c| gcd(g, c));
        let f = Fraction { num: num.iter().map(|c| c / g).collect(), den: den / g };
        self.sigma_rays.iter().all(|n| dot(&f.num, n) == f.den).then_some(f)
    }

    /// A coordinate box containing every `x` with `0 <= <x, n_i> <= bound_i`.
    pub fn pairing_box(&self, bound: &[i128]) -> Vec<(i128, i128)> {
        let (m, dt) = self.independent_sigma_rays();
        let idx: Vec<usize> = m.iter().map(|r| self.sigma_rays.iter().position(|n| n == r).unwrap()).collect();
        // x = m^{-1} t with m^{-1} = adj(m) / det
        (0..self.d)
            .map(|k| {
                let mut reach = 0;
                for (j, &i) in idx.iter().enumerate() {
                    let minor: Vec<Vector> = m
                        .iter()
                        .enumerate()
                        .filter(|(r, _)| *r != j)
                        .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != k).map(|(_, &x)| x).collect())
                        .collect();
                    reach += det(&minor).abs() * bound[i];
                }
                let r = reach / dt.abs() + 1;
                (-r, r)
            })
            .collect()
    }

    /// Semigroup points with every pairing at most the matching `bound`.
    pub fn bounded_points(&self, bound: &[i128]) -> Vec<Vector> {
        let mut out = Vec::new();
        let bx = self.pairing_box(bound);
        for_each_in_box(&bx, |x| {
            let t = self.pairings(x);
            if t.iter().zip(bound).all(|(v, b)| *v >= 0 && v <= b) {
                out.push(x.to_vec());
            }
        });
        out
    }

    /// Irreducible nonzero elements of the semigroup; they lie in the zonotope
    /// spanned by the dual rays, so pairings are below the sum of ray pairings.
    pub fn hilbert_basis(&self) -> Vec<Vector> {
        let bound: Vector = self.sigma_rays.iter().map(|n| self.dual_rays.iter().map(|r| dot(r, n)).sum()).collect();
        let pts: Vec<Vector> = self.bounded_points(&bound).into_iter().filter(|p| p.iter().any(|&c| c != 0)).collect();
        let mut basis: Vec<Vector> = pts
            .iter()
            .filter(|p| {
                !pts.iter().any(|q| {
                    let diff: Vector = p.iter().zip(q.iter()).map(|(a, b)| a - b).collect();
                    q != *p && diff.iter().any(|&c| c != 0) && self.in_semigroup(&diff)
                })
            })
            .cloned()
            .collect();
        basis.sort();
        basis
    }

    /// Minimal lattice points of `{x : f·x >= c} ∩ σ^∨`, where the constraint
    /// set must be stable under translation by `σ^∨`. Vertices come from every
    /// `d`-subset of constraint hyperplanes; minimal points then have pairings
    /// at most the vertex maximum plus the sum of all dual ray pairings.
    pub fn minimal_points(&self, constraints: &[(Vector, i128)]) -> Vec<Vector> {
        let mut all: Vec<(Vector, i128)> = constraints.to_vec();
        all.extend(self.sigma_rays.iter().map(|n| (n.clone(), 0)));
        let vertices = brute_vertices(&all, self.d);
        if vertices.is_empty() {
            return Vec::new();
        }
        let bound: Vector = self
            .sigma_rays
            .iter()
            .map(|n| {
                let top = vertices.iter().map(|v| ceil_div(dot(&v.num, n), v.den)).max().unwrap();
                top + self.dual_rays.iter().map(|r| dot(r, n)).sum::<i128>()
            })
            .collect();
        let member = |w: &[i128]| in_closed(&all, w);
        let basis = self.hilbert_basis();
        let mut out: Vec<Vector> = self
            .bounded_points(&bound)
            .into_iter()
            .filter(|w| member(w))
            .filter(|w| {
                basis.iter().all(|h| {
                    let lower: Vector = w.iter().zip(h).map(|(a, b)| a - b).collect();
                    !member(&lower)
                })
            })
            .collect();
        out.sort();
        out
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

/// Vertices of `{x : f·x >= c}` as fractions, by solving every `d`-subset of
/// tight constraints with Cramer's rule.
pub fn brute_vertices(constraints: &[(Vector, i128)], d: usize) -> Vec<Fraction> {
    let mut out: Vec<Fraction> = Vec::new();
    for subset in constraints.iter().combinations(d) {
        let m: Vec<Vector> = subset.iter().map(|(f, _)| f.clone()).collect();
        let dt = det(&m);
        if dt == 0 {
            continue;
        }
        let num: Vector = (0..d)
            .map(|k| {
                let replaced: Vec<Vector> = subset
                    .iter()
                    .map(|(f, c)| f.iter().enumerate().map(|(j, &x)| if j == k { *c } else { x }).collect())
                    .collect();
                det(&replaced)
            })
            .collect();
        let (num, den) = if dt < 0 { (num.iter().map(|c| -c).collect(), -dt) } else { (num, dt) };
        let g = num.iter().fold(den, |g, &c| gcd(g, c));
        let v = Fraction { num: num.iter().map(|c| c / g).collect(), den: den / g };
        if constraints.iter().all(|(f, c)| dot(f, &v.num) >= c * v.den) && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

pub fn for_each_in_box(bx: &[(i128, i128)], mut visit: impl FnMut(&[i128])) {
    let mut x: Vector = bx.iter().map(|(lo, _)| *lo).collect();
    if bx.iter().any(|(lo, hi)| lo > hi) {
        return;
    }
    loop {
        visit(&x);
        let mut k = 0;
        loop {
            if k == bx.len() {
                return;
            }
            if x[k] < bx[k].1 {
                x[k] += 1;
                break;
            }
            x[k] = bx[k].0;
            k += 1;
        }
    }
}

pub fn generators(ideal: &MonomialIdeal) -> Vec<Vector> {
    ideal.generators().iter().map(to_vector).collect()
}

pub fn in_closed(facets: &[(Vector, i128)], x: &[i128]) -> bool {
    facets.iter().all(|(f, c)| dot(f, x) >= *c)
}

/// `x + u` strictly inside every facet, with `u` rational.
pub fn in_shifted_interior(facets: &[(Vector, i128)], x: &[i128], u: &Fraction) -> bool {
    facets.iter().all(|(f, c)| u.den * (dot(f, x) - c) + dot(f, &u.num) > 0)
}

/// Brute-force integral closure: minimal lattice points of the Newton polyhedron.
pub fn closure(ring: &OracleRing, gens: &[Vector]) -> Vec<Vector> {
    ring.minimal_points(&polyhedron_facets(gens, &ring.dual_rays, ring.d))
}

/// Brute-force multiplier ideal generators; `None` if the ring is not Q-Gorenstein.
/// For lattice `w`, `f·(w + u0) > c` is `f·w >= floor((c·den - f·num) / den) + 1`.
pub fn multiplier(ring: &OracleRing, gens: &[Vector]) -> Option<Vec<Vector>> {
    let u0 = ring.canonical_shift()?;
    let tightened: Vec<(Vector, i128)> = polyhedron_facets(gens, &ring.dual_rays, ring.d)
        .into_iter()
        .map(|(f, c)| {
            let t = c * u0.den - dot(&f, &u0.num);
            let offset = t.div_euclid(u0.den) + 1;
            (f, offset)
        })
        .collect();
    Some(ring.minimal_points(&tightened))
}

/// Divisibility-minimal elements of a finite set.
pub fn minimalize(ring: &OracleRing, pts: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = pts
        .iter()
        .filter(|p| {
            !pts.iter().any(|q| {
                let diff: Vector = p.iter().zip(q.iter()).map(|(a, b)| a - b).collect();
                q != *p && ring.in_semigroup(&diff)
            })
        })
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn product(ring: &OracleRing, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let sums: Vec<Vector> =
        a.iter().flat_map(|x| b.iter().map(move |y| x.iter().zip(y).map(|(p, q)| p + q).collect())).collect();
    minimalize(ring, &sums)
}

pub fn contains(ring: &OracleRing, gens: &[Vector], w: &[i128]) -> bool {
    gens.iter().any(|g| {
        let diff: Vector = w.iter().zip(g).map(|(a, b)| a - b).collect();
        ring.in_semigroup(&diff)
    })
}
