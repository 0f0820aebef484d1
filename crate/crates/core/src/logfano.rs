//! Boundary-divisor synthesis: when is the blow-up log Fano?
//!
//! Candidate boundaries have the form
//! `Delta = x*H0 + y*L0 + z*E + w*F + u*D` over the five effective
//! generators. The support is simple normal crossing, so the pair is klt
//! exactly when all five coefficients lie in [0, 1), and `-(K + Delta)` is
//! ample exactly when four more strict rows hold. Bundling both halves
//! gives one 14-row system in (x, y, z, w, u) per geometry; feasibility of
//! that system is decided by Fourier–Motzkin elimination, which also
//! extracts an explicit witness.
//!
//! Infeasibility of this system does NOT mean the variety is not log Fano,
//! since boundaries supported outside the five generators are not searched;
//! the negative verdict is `Unknown`, never "no".

use std::collections::BTreeMap;

use crate::fm::{LinIneq, LinIneqSystem, Witness};
use crate::lattice::{DeltaCoeffs, Geometry};
use crate::rat::Rat;

const VARS: [&str; 5] = ["x", "y", "z", "w", "u"];

/// Where a boundary witness came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessSource {
    /// The built-in catalog of known boundary coefficients.
    Table,
    /// Fourier–Motzkin search.
    FmSearch,
}

/// Outcome of the boundary search.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)] // verdicts are transient, not stored in bulk
pub enum LogFanoVerdict {
    /// A verified boundary divisor of the 5-generator form exists.
    Yes {
        witness: DeltaCoeffs,
        source: WitnessSource,
    },
    /// No boundary of the 5-generator form exists; whether some other
    /// boundary works is open.
    Unknown,
}

impl LogFanoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, LogFanoVerdict::Yes { .. })
    }

    pub fn witness(&self) -> Option<&DeltaCoeffs> {
        match self {
            LogFanoVerdict::Yes { witness, .. } => Some(witness),
            LogFanoVerdict::Unknown => None,
        }
    }
}

/// The pair is klt iff every coefficient lies in [0, 1).
pub fn klt_check(c: &DeltaCoeffs) -> bool {
    c.coords()
        .iter()
        .all(|v| !v.is_negative() && **v < Rat::one())
}

/// The 14-row system in (x, y, z, w, u) whose solutions are exactly the
/// boundary divisors of the 5-generator form:
///
/// ```text
/// 0 <= x, y, z, w, u                (klt, lower half)
/// x, y, z, w, u < 1                 (klt, upper half)
/// z - u          < 1
/// y - d*x + d*z  < k + 1 - (n-k)*d  (ampleness of -(K + Delta))
/// x - y - z + w  < n - 2k + 1
/// y - w + u      < k - 1
/// ```
pub fn logfano_system(g: &Geometry) -> LinIneqSystem {
    let (n, k, d) = (g.n(), g.k(), g.d());
    let one = Rat::one;
    let minus_one = || Rat::from_int(-1);
    let dr = Rat::from_int(d);

    let mut rows = Vec::with_capacity(14);
    for v in VARS {
        rows.push(LinIneq::le([(v, minus_one())], Rat::zero()));
    }
    for v in VARS {
        rows.push(LinIneq::lt([(v, one())], minus_one()));
    }
    rows.push(LinIneq::lt([("z", one()), ("u", minus_one())], minus_one()));
    rows.push(LinIneq::lt(
        [("y", one()), ("x", -&dr), ("z", dr.clone())],
        Rat::from_int(-(k + 1 - (n - k) * d)),
    ));
    rows.push(LinIneq::lt(
        [
            ("x", one()),
            ("y", minus_one()),
            ("z", minus_one()),
            ("w", one()),
        ],
        Rat::from_int(-(n - 2 * k + 1)),
    ));
    rows.push(LinIneq::lt(
        [("y", one()), ("w", minus_one()), ("u", one())],
        Rat::from_int(-(k - 1)),
    ));

    LinIneqSystem::new(VARS.to_vec(), rows).expect("closed variable set")
}

fn coeffs_to_witness(c: &DeltaCoeffs) -> Witness {
    let mut assignment = BTreeMap::new();
    for (name, value) in VARS.iter().zip(c.coords()) {
        assignment.insert(name.to_string(), value.clone());
    }
    Witness::new(assignment)
}

fn witness_to_coeffs(w: &Witness) -> DeltaCoeffs {
    let [x, y, z, w_, u] =
        VARS.map(|name| w.get(name).expect("boundary variable assigned").clone());
    DeltaCoeffs::new(x, y, z, w_, u)
}

/// True when `c` satisfies every row of [`logfano_system`] at `g`.
pub fn verify_boundary(c: &DeltaCoeffs, g: &Geometry) -> bool {
    logfano_system(g).check(&coeffs_to_witness(c))
}

/// Search for a boundary divisor by Fourier–Motzkin elimination. A found
/// witness is re-verified against the full system before being returned.
pub fn find_boundary(g: &Geometry) -> LogFanoVerdict {
    match logfano_system(g).find_witness() {
        Some(witness) => {
            let coeffs = witness_to_coeffs(&witness);
            assert!(
                verify_boundary(&coeffs, g),
                "witness failed re-verification"
            );
            LogFanoVerdict::Yes {
                witness: coeffs,
                source: WitnessSource::FmSearch,
            }
        }
        None => LogFanoVerdict::Unknown,
    }
}

/// Closed-form feasibility of the boundary system:
/// for n = 3 it is feasible for every d; for n >= 4 exactly when d = 1 and
/// n is one of 2k-2, 2k-1, 2k, 2k+1, or (n, k, d) is one of (4,2,2),
/// (4,3,2), (5,3,2).
pub fn closed_form_feasible(g: &Geometry) -> bool {
    let (n, k, d) = (g.n(), g.k(), g.d());
    if n == 3 {
        return true;
    }
    if d == 1 {
        return (2 * k - 2..=2 * k + 1).contains(&n);
    }
    matches!((n, k, d), (4, 2, 2) | (4, 3, 2) | (5, 3, 2))
}

/// The catalog of known boundary coefficients, when `g` matches a row:
///
/// - n = 3: (0, 0, 1/2, 0, 0) for d = 1, and
///   ((d-2)/(d-1), (d-2)/(d-1), 1/2d, 0, 0) for d >= 2;
/// - n >= 4, d = 1: by n - 2k in -2..=1;
/// - the three sporadic degree-2 triples.
pub fn table_witness(g: &Geometry) -> Option<DeltaCoeffs> {
    let (n, k, d) = (g.n(), g.k(), g.d());
    let zero = Rat::zero;

    if n == 3 {
        if d == 1 {
            return Some(DeltaCoeffs::new(
                zero(),
                zero(),
                Rat::new(1, 2),
                zero(),
                zero(),
            ));
        }
        let xy = Rat::new(d - 2, d - 1);
        return Some(DeltaCoeffs::new(
            xy.clone(),
            xy,
            Rat::new(1, 2 * d),
            zero(),
            zero(),
        ));
    }

    if d == 1 {
        return match n - 2 * k {
            -2 => Some(DeltaCoeffs::new(
                zero(),
                Rat::new(1, 2),
                Rat::new(3, 4),
                zero(),
                zero(),
            )),
            -1 => Some(DeltaCoeffs::new(
                zero(),
                Rat::new(1, 2),
                zero(),
                zero(),
                zero(),
            )),
            0 => Some(DeltaCoeffs::zero()),
            1 => Some(DeltaCoeffs::new(
                Rat::new(1, 2),
                zero(),
                zero(),
                zero(),
                zero(),
            )),
            _ => None,
        };
    }

    match (n, k, d) {
        (4, 2, 2) => Some(DeltaCoeffs::new(
            Rat::new(3, 4),
            zero(),
            zero(),
            zero(),
            zero(),
        )),
        (4, 3, 2) => Some(DeltaCoeffs::new(
            Rat::new(1, 8),
            Rat::new(1, 2),
            Rat::new(3, 4),
            zero(),
            zero(),
        )),
        (5, 3, 2) => Some(DeltaCoeffs::new(
            Rat::new(1, 2),
            Rat::new(1, 2),
            Rat::new(1, 8),
            zero(),
            zero(),
        )),
        _ => None,
    }
}

/// [`table_witness`] wrapped as a verified verdict.
pub fn table_verdict(g: &Geometry) -> Option<LogFanoVerdict> {
    let witness = table_witness(g)?;
    assert!(
        verify_boundary(&witness, g),
        "catalog witness failed verification at {g}"
    );
    Some(LogFanoVerdict::Yes {
        witness,
        source: WitnessSource::Table,
    })
}
