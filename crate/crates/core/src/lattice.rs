//! The rank-4 numerical lattice of the double blow-up.
//!
//! The variety is built from Y = P^(n-k) x P^k: first blow up a degree-d
//! hypersurface C inside a fiber of the first projection, then blow up the
//! strict transform of a fiber S of the second projection. Divisor classes
//! are stored in the basis (H, L, E, F) of the two hyperplane pullbacks and
//! the two exceptional divisors, and curve classes in the dual-ish basis
//! (l, h, e, f) of fiber lines and exceptional lines. The intersection
//! pairing between those bases is diag(1, 1, -1, -1).
//!
//! Everything else (strict transforms H0, L0, D, the anticanonical class,
//! boundary divisors) is derived from these two bases, never stored
//! independently.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::rat::Rat;

// "(a, b, c, d)" display for the two class types.
macro_rules! fmt_tuple4 {
    ($a:ident, $b:ident, $c:ident, $d:ident) => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "({}, {}, {}, {})", self.$a, self.$b, self.$c, self.$d)
        }
    };
}

/// The discrete data fixing the variety: dimension n of Y, dimension k of
/// the second projective factor, degree d of the hypersurface C.
///
/// Valid triples satisfy n >= 3, 2 <= k <= n-1 and d >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Geometry {
    n: i64,
    k: i64,
    d: i64,
}

impl Geometry {
    pub fn new(n: i64, k: i64, d: i64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGeometry(format!("n must be ≥ 3 (got {n})")));
        }
        if k < 2 || k > n - 1 {
            return Err(Error::InvalidGeometry(format!(
                "k must satisfy 2 ≤ k ≤ n−1 (got k={k}, n={n})"
            )));
        }
        if d < 1 {
            return Err(Error::InvalidGeometry(format!("d must be ≥ 1 (got {d})")));
        }
        Ok(Geometry { n, k, d })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// All valid triples with `n <= n_max` and `d <= d_max`, ordered by
    /// (n, k, d).
    pub fn valid_triples(n_max: i64, d_max: i64) -> Vec<Geometry> {
        let mut out = Vec::new();
        for n in 3..=n_max {
            for k in 2..=n - 1 {
                for d in 1..=d_max {
                    out.push(Geometry { n, k, d });
                }
            }
        }
        out
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.k, self.d)
    }
}

/// A numerical divisor class, coordinates in the ordered basis (H, L, E, F).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivClass {
    pub h: Rat,
    pub l: Rat,
    pub e: Rat,
    pub f: Rat,
}

impl DivClass {
    pub fn new(h: Rat, l: Rat, e: Rat, f: Rat) -> Self {
        DivClass { h, l, e, f }
    }

    pub fn from_ints(h: i64, l: i64, e: i64, f: i64) -> Self {
        DivClass::new(
            Rat::from_int(h),
            Rat::from_int(l),
            Rat::from_int(e),
            Rat::from_int(f),
        )
    }

    pub fn zero() -> Self {
        DivClass::from_ints(0, 0, 0, 0)
    }

    /// H: pullback of a hyperplane from P^(n-k).
    pub fn basis_h() -> Self {
        DivClass::from_ints(1, 0, 0, 0)
    }

    /// L: pullback of a hyperplane from P^k.
    pub fn basis_l() -> Self {
        DivClass::from_ints(0, 1, 0, 0)
    }

    /// E: pullback of the exceptional divisor of the first blow-up.
    pub fn basis_e() -> Self {
        DivClass::from_ints(0, 0, 1, 0)
    }

    /// F: exceptional divisor of the second blow-up.
    pub fn basis_f() -> Self {
        DivClass::from_ints(0, 0, 0, 1)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        DivClass::new(c * &self.h, c * &self.l, c * &self.e, c * &self.f)
    }

    pub fn coords(&self) -> [&Rat; 4] {
        [&self.h, &self.l, &self.e, &self.f]
    }
}

impl Add for DivClass {
    type Output = DivClass;
    fn add(self, rhs: DivClass) -> DivClass {
        DivClass::new(
            self.h + rhs.h,
            self.l + rhs.l,
            self.e + rhs.e,
            self.f + rhs.f,
        )
    }
}

impl Sub for DivClass {
    type Output = DivClass;
    fn sub(self, rhs: DivClass) -> DivClass {
        DivClass::new(
            self.h - rhs.h,
            self.l - rhs.l,
            self.e - rhs.e,
            self.f - rhs.f,
        )
    }
}

impl Neg for DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass::new(-self.h, -self.l, -self.e, -self.f)
    }
}

impl fmt::Display for DivClass {
    fmt_tuple4!(h, l, e, f);
}

/// A numerical 1-cycle class, coordinates in the ordered basis (l, h, e, f):
/// a line in a fiber of each projection and a line in each exceptional
/// divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    pub l: Rat,
    pub h: Rat,
    pub e: Rat,
    pub f: Rat,
}

impl CurveClass {
    pub fn new(l: Rat, h: Rat, e: Rat, f: Rat) -> Self {
        CurveClass { l, h, e, f }
    }

    pub fn from_ints(l: i64, h: i64, e: i64, f: i64) -> Self {
        CurveClass::new(
            Rat::from_int(l),
            Rat::from_int(h),
            Rat::from_int(e),
            Rat::from_int(f),
        )
    }

    pub fn zero() -> Self {
        CurveClass::from_ints(0, 0, 0, 0)
    }

    pub fn basis_l() -> Self {
        CurveClass::from_ints(1, 0, 0, 0)
    }

    pub fn basis_h() -> Self {
        CurveClass::from_ints(0, 1, 0, 0)
    }

    pub fn basis_e() -> Self {
        CurveClass::from_ints(0, 0, 1, 0)
    }

    pub fn basis_f() -> Self {
        CurveClass::from_ints(0, 0, 0, 1)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        CurveClass::new(c * &self.l, c * &self.h, c * &self.e, c * &self.f)
    }
}

impl Add for CurveClass {
    type Output = CurveClass;
    fn add(self, rhs: CurveClass) -> CurveClass {
        CurveClass::new(
            self.l + rhs.l,
            self.h + rhs.h,
            self.e + rhs.e,
            self.f + rhs.f,
        )
    }
}

impl Sub for CurveClass {
    type Output = CurveClass;
    fn sub(self, rhs: CurveClass) -> CurveClass {
        CurveClass::new(
            self.l - rhs.l,
            self.h - rhs.h,
            self.e - rhs.e,
            self.f - rhs.f,
        )
    }
}

impl fmt::Display for CurveClass {
    fmt_tuple4!(l, h, e, f);
}

/// Coefficients of a candidate boundary divisor
/// `Delta = x*H0 + y*L0 + z*E + w*F + u*D` over the five effective
/// generators. The klt box constraints are checked by an operation, not by
/// the type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaCoeffs {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
    pub w: Rat,
    pub u: Rat,
}

impl DeltaCoeffs {
    pub fn new(x: Rat, y: Rat, z: Rat, w: Rat, u: Rat) -> Self {
        DeltaCoeffs { x, y, z, w, u }
    }

    pub fn zero() -> Self {
        DeltaCoeffs::new(
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        )
    }

    pub fn coords(&self) -> [&Rat; 5] {
        [&self.x, &self.y, &self.z, &self.w, &self.u]
    }
}

impl fmt::Display for DeltaCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.x, self.y, self.z, self.w, self.u
        )
    }
}

/// Intersection number of a divisor class with a curve class: the pairing
/// matrix between (H, L, E, F) and (l, h, e, f) is diag(1, 1, -1, -1).
pub fn pair(divisor: &DivClass, curve: &CurveClass) -> Rat {
    &divisor.h * &curve.l + &divisor.l * &curve.h - &divisor.e * &curve.e - &divisor.f * &curve.f
}

/// Strict transforms of the fiber lines and exceptional lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCurves {
    /// l0 = l - e: a fiber line of the second projection meeting C.
    pub l0: CurveClass,
    /// h0 = h - d*e: a line in the blown-up fiber, meeting C in d points.
    pub h0: CurveClass,
    /// e0 = e - f: a line in the exceptional divisor over S ∩ C.
    pub e0: CurveClass,
    /// f: a line in a fiber of the second exceptional divisor.
    pub f: CurveClass,
}

pub fn named_curves(g: &Geometry) -> NamedCurves {
    let d = Rat::from_int(g.d());
    NamedCurves {
        l0: CurveClass::basis_l() - CurveClass::basis_e(),
        h0: CurveClass::basis_h() - CurveClass::basis_e().scale(&d),
        e0: CurveClass::basis_e() - CurveClass::basis_f(),
        f: CurveClass::basis_f(),
    }
}

/// Strict transforms of the three distinguished effective divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedDivisors {
    /// H0 = H - E: a member of |H| through the blown-up fiber.
    pub h0: DivClass,
    /// L0 = L - F: a member of |L| through S.
    pub l0: DivClass,
    /// D = d*L - E - F: the cylinder over the image of C.
    pub d: DivClass,
}

pub fn named_divisors(g: &Geometry) -> NamedDivisors {
    let d = Rat::from_int(g.d());
    NamedDivisors {
        h0: DivClass::basis_h() - DivClass::basis_e(),
        l0: DivClass::basis_l() - DivClass::basis_f(),
        d: DivClass::basis_l().scale(&d) - DivClass::basis_e() - DivClass::basis_f(),
    }
}

/// The anticanonical class (n-k+1, k+1, -(n-k), -(k-1)).
pub fn anticanonical(g: &Geometry) -> DivClass {
    DivClass::from_ints(g.n() - g.k() + 1, g.k() + 1, -(g.n() - g.k()), -(g.k() - 1))
}

/// The class of `Delta = x*H0 + y*L0 + z*E + w*F + u*D` in the (H, L, E, F)
/// basis: (x, y + d*u, -x + z - u, -y + w - u).
pub fn delta_class(c: &DeltaCoeffs, g: &Geometry) -> DivClass {
    let d = Rat::from_int(g.d());
    DivClass::new(
        c.x.clone(),
        &c.y + &(&d * &c.u),
        &(-&c.x) + &c.z - c.u.clone(),
        &(-&c.y) + &c.w - c.u.clone(),
    )
}

/// The four substituted coefficients (alpha, beta, gamma, delta) of a
/// boundary divisor: the same numbers as [`delta_class`], returned as a
/// tuple for use in the positivity inequalities.
pub fn delta_to_greek(c: &DeltaCoeffs, g: &Geometry) -> (Rat, Rat, Rat, Rat) {
    let cls = delta_class(c, g);
    (cls.h, cls.l, cls.e, cls.f)
}
