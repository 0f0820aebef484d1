//! Closed-form positivity criteria for the anticanonical class and its
//! boundary-twisted variants.
//!
//! For a boundary class `Delta = alpha*H + beta*L + gamma*E + delta*F`, the
//! class `-(K + Delta)` is ample exactly when
//!
//! ```text
//! alpha + gamma   < 1
//! beta + d*gamma  < k + 1 - (n-k)*d
//! -gamma + delta  < n - 2k + 1
//! -delta          < k - 1
//! ```
//!
//! and nef when the same rows hold non-strictly: the four comparisons are
//! exactly the nef coordinates of `-(K + Delta)`. With `Delta = 0` the
//! first and last rows are vacuous (1 > 0 and k - 1 > 0), which leaves the
//! two-row test for `-K` itself.
//!
//! `-K` is big for every valid geometry: it splits as an ample class plus
//! an effective class with explicit rational coefficients, and the split is
//! recomputed and asserted rather than trusted.

use crate::cones::{self, effective_generators, nef_coords};
use crate::lattice::{anticanonical, DivClass, Geometry};
use crate::rat::Rat;

/// Three-way answer for the anticanonical class, so "nef but not ample"
/// (weak Fano but not Fano) is a first-class value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinusKStatus {
    Ample,
    NefNotAmple,
    NotNef,
}

/// Positivity summary of a single divisor class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub nef_coords: [Rat; 4],
    pub ample: bool,
    pub nef: bool,
    pub big: bool,
}

/// Evaluate nef coordinates, nefness, ampleness and bigness of a class.
pub fn report(class: &DivClass, g: &Geometry) -> PositivityReport {
    let coords = nef_coords(class, g);
    let nef = coords.iter().all(|c| !c.is_negative());
    let ample = coords.iter().all(|c| c.is_positive());
    let big = cones::is_big(class, g);
    debug_assert!(!ample || (nef && big));
    PositivityReport {
        nef_coords: coords,
        ample,
        nef,
        big,
    }
}

/// The four (left side, right side) pairs of the ampleness system for
/// `-(K + Delta)`, with `delta` the boundary class in the (H, L, E, F)
/// basis.
pub fn ample_rows(delta: &DivClass, g: &Geometry) -> [(Rat, Rat); 4] {
    let (n, k, d) = (g.n(), g.k(), g.d());
    let dr = Rat::from_int(d);
    [
        (&delta.h + &delta.e, Rat::one()),
        (
            &delta.l + &(&dr * &delta.e),
            Rat::from_int(k + 1 - (n - k) * d),
        ),
        (&delta.f - &delta.e, Rat::from_int(n - 2 * k + 1)),
        (-&delta.f, Rat::from_int(k - 1)),
    ]
}

///`-(K + Delta)` is ample: all four rows hold strictly.
pub fn ample_criterion(delta: &DivClass, g: &Geometry) -> bool {
    ample_rows(delta, g).iter().all(|(lhs, rhs)| lhs < rhs)
}

/// `-(K + Delta)` is nef: all four rows hold non-strictly.
pub fn nef_criterion(delta: &DivClass, g: &Geometry) -> bool {
    ample_rows(delta, g).iter().all(|(lhs, rhs)| lhs <= rhs)
}

/// Classify `-K` by the two non-vacuous rows: ample iff
/// `0 < k + 1 - (n-k)d` and `0 < n - 2k + 1`, nef iff both are >= 0.
pub fn minus_k_status(g: &Geometry) -> MinusKStatus {
    let (n, k, d) = (g.n(), g.k(), g.d());
    let degree_row = k + 1 - (n - k) * d;
    let dimension_row = n - 2 * k + 1;
    if degree_row > 0 && dimension_row > 0 {
        MinusKStatus::Ample
    } else if degree_row >= 0 && dimension_row >= 0 {
        MinusKStatus::NefNotAmple
    } else {
        MinusKStatus::NotNef
    }
}

/// An explicit split `-K = ample_part + effective_part` witnessing that the
/// anticanonical class is big.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigDecomposition {
    /// `(1/2 + 1/d, 1 + 1/2d, -1/d, -1/2d)`; its nef coordinates are
    /// `(1/2, 1/2d, 1/2d, 1/2d)`, all positive.
    pub ample_part: DivClass,
    /// `-K - ample_part`, effective with the certificate below.
    pub effective_part: DivClass,
    /// Coefficients of the effective part over [H0, L0, E, F, D]:
    /// `(n - k + 1/2 - 1/d, k - 1/2d, 1/2, 1, 0)`.
    pub certificate: [Rat; 5],
}

/// Split `-K` into an ample class plus an effective class. The identity
/// `ample_part + effective_part = -K`, the positivity of the ample part's
/// nef coordinates and the validity of the certificate are all asserted.
pub fn big_decomposition(g: &Geometry) -> BigDecomposition {
    let (n, k, d) = (g.n(), g.k(), g.d());
    let half = Rat::new(1, 2);
    let inv_d = Rat::new(1, d);
    let inv_2d = Rat::new(1, 2 * d);

    let ample_part = DivClass::new(
        &half + &inv_d,
        Rat::one() + inv_2d.clone(),
        -&inv_d,
        -&inv_2d,
    );
    let effective_part = DivClass::new(
        Rat::from_int(n - k) + &half - &inv_d,
        Rat::from_int(k) - inv_2d.clone(),
        -(Rat::from_int(n - k) - &inv_d),
        -(Rat::from_int(k - 1) - &inv_2d),
    );
    let certificate = [
        Rat::from_int(n - k) + &half - &inv_d,
        Rat::from_int(k) - inv_2d,
        half,
        Rat::one(),
        Rat::zero(),
    ];

    // Self-checks instead of trust: the split must recombine to -K, the
    // first part must be ample, and the certificate must reproduce the
    // second part with nonnegative coefficients.
    assert!(
        ample_part.clone() + effective_part.clone() == anticanonical(g),
        "decomposition does not sum to the anticanonical class at {g}"
    );
    assert!(
        nef_coords(&ample_part, g).iter().all(|c| c.is_positive()),
        "ample part is not ample at {g}"
    );
    let gens = effective_generators(g);
    let mut sum = DivClass::zero();
    for (c, gen) in certificate.iter().zip(gens.iter()) {
        assert!(!c.is_negative(), "negative certificate coefficient at {g}");
        sum = sum + gen.scale(c);
    }
    assert!(
        sum == effective_part,
        "certificate does not reproduce the effective part at {g}"
    );

    BigDecomposition {
        ample_part,
        effective_part,
        certificate,
    }
}

/// `-K` is big for every valid geometry; the decomposition self-check runs
/// on each call rather than being assumed.
pub fn minus_k_big(g: &Geometry) -> bool {
    let _ = big_decomposition(g);
    true
}
