//! Nef-cone and effective-cone structure.
//!
//! The nef cone is spanned by N1 = H, N2 = L, N3 = H + dL - E and
//! N4 = H + dL - E - F, and these generators pair with the strict-transform
//! curves (l0, h0, e0, f) as the identity matrix. Nef coordinates of a
//! class are therefore just its intersection numbers against those four
//! curves, and nefness/ampleness are sign conditions on them.
//!
//! The effective cone is spanned by H0, L0, E, F and D. Membership and
//! interiority questions are handed to the Fourier–Motzkin engine; the
//! five generators only span rank 4, so certificates are not unique and
//! callers should treat the returned one as "some valid certificate".

use crate::fm::{LinIneq, LinIneqSystem, Witness};
use crate::lattice::{named_curves, named_divisors, pair, DivClass, Geometry};
use crate::rat::Rat;

/// The four nef-cone generators, in the order dual to (l0, h0, e0, f).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefBasis {
    pub n1: DivClass,
    pub n2: DivClass,
    pub n3: DivClass,
    pub n4: DivClass,
}

impl NefBasis {
    pub fn new(g: &Geometry) -> Self {
        let d = g.d();
        NefBasis {
            n1: DivClass::basis_h(),
            n2: DivClass::basis_l(),
            n3: DivClass::from_ints(1, d, -1, 0),
            n4: DivClass::from_ints(1, d, -1, -1),
        }
    }

    pub fn generators(&self) -> [&DivClass; 4] {
        [&self.n1, &self.n2, &self.n3, &self.n4]
    }
}

/// The five effective-cone generators, ordered [H0, L0, E, F, D].
pub fn effective_generators(g: &Geometry) -> [DivClass; 5] {
    let nd = named_divisors(g);
    [nd.h0, nd.l0, DivClass::basis_e(), DivClass::basis_f(), nd.d]
}

/// Coordinates of `class` in the nef basis: the intersection numbers with
/// (l0, h0, e0, f). The reconstruction `class = sum(c_i * N_i)` is exact.
pub fn nef_coords(class: &DivClass, g: &Geometry) -> [Rat; 4] {
    let c = named_curves(g);
    [
        pair(class, &c.l0),
        pair(class, &c.h0),
        pair(class, &c.e0),
        pair(class, &c.f),
    ]
}

/// Nonnegative on every curve class: all four nef coordinates >= 0.
pub fn is_nef(class: &DivClass, g: &Geometry) -> bool {
    nef_coords(class, g).iter().all(|c| !c.is_negative())
}

/// Interior point of the nef cone: all four nef coordinates > 0.
pub fn is_ample(class: &DivClass, g: &Geometry) -> bool {
    nef_coords(class, g).iter().all(|c| c.is_positive())
}

const CERT_VARS: [&str; 5] = ["a1", "a2", "a3", "a4", "a5"];

// Equality rows (as paired <= inequalities) expressing
// `class - shift = sum(a_i * gen_i)` plus nonnegativity of every a_i.
fn membership_rows(class: &DivClass, shift: &DivClass, gens: &[DivClass; 5]) -> Vec<LinIneq> {
    let mut rows = Vec::with_capacity(13);
    let target = class.clone() - shift.clone();
    for axis in 0..4 {
        let coeffs: Vec<(&str, Rat)> = CERT_VARS
            .iter()
            .zip(gens.iter())
            .map(|(name, gen)| (*name, gen.coords()[axis].clone()))
            .collect();
        let constant = -target.coords()[axis].clone();
        rows.push(LinIneq::le(coeffs.clone(), constant.clone()));
        rows.push(LinIneq::le(
            coeffs.into_iter().map(|(v, c)| (v, -c)),
            -constant,
        ));
    }
    for name in CERT_VARS {
        rows.push(LinIneq::le([(name, Rat::from_int(-1))], Rat::zero()));
    }
    rows
}

fn witness_to_cert(w: &Witness) -> [Rat; 5] {
    CERT_VARS.map(|name| w.get(name).expect("certificate variable assigned").clone())
}

/// Nonnegative coefficients over [H0, L0, E, F, D] reproducing `class`
/// exactly, or `None` when the class is not effective.
pub fn effective_membership(class: &DivClass, g: &Geometry) -> Option<[Rat; 5]> {
    let gens = effective_generators(g);
    let rows = membership_rows(class, &DivClass::zero(), &gens);
    let sys = LinIneqSystem::new(CERT_VARS.to_vec(), rows).expect("closed variable set");
    let witness = sys.find_witness()?;
    let cert = witness_to_cert(&witness);

    let mut recombined = DivClass::zero();
    for (c, gen) in cert.iter().zip(gens.iter()) {
        assert!(!c.is_negative(), "negative certificate coefficient");
        recombined = recombined + gen.scale(c);
    }
    assert!(
        recombined == *class,
        "certificate does not reproduce the class"
    );
    Some(cert)
}

/// Interior point of the effective cone: `class - eps * (sum of generators)`
/// stays effective for some rational eps > 0, with eps an unknown of the
/// same system.
pub fn is_big(class: &DivClass, g: &Geometry) -> bool {
    let gens = effective_generators(g);
    let shift: DivClass = gens
        .iter()
        .cloned()
        .fold(DivClass::zero(), |acc, gen| acc + gen);

    // rows over a1..a5 and eps: class - eps*shift = sum(a_i gen_i), a_i >= 0, eps > 0
    let mut rows = Vec::with_capacity(14);
    for axis in 0..4 {
        let mut coeffs: Vec<(&str, Rat)> = CERT_VARS
            .iter()
            .zip(gens.iter())
            .map(|(name, gen)| (*name, gen.coords()[axis].clone()))
            .collect();
        coeffs.push(("eps", shift.coords()[axis].clone()));
        let constant = -class.coords()[axis].clone();
        rows.push(LinIneq::le(coeffs.clone(), constant.clone()));
        rows.push(LinIneq::le(
            coeffs.into_iter().map(|(v, c)| (v, -c)),
            -constant,
        ));
    }
    for name in CERT_VARS {
        rows.push(LinIneq::le([(name, Rat::from_int(-1))], Rat::zero()));
    }
    rows.push(LinIneq::lt([("eps", Rat::from_int(-1))], Rat::zero()));

    let mut vars = CERT_VARS.to_vec();
    vars.push("eps");
    LinIneqSystem::new(vars, rows)
        .expect("closed variable set")
        .feasible()
}
