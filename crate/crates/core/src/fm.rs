//! Exact linear-inequality systems and Fourier–Motzkin elimination.
//!
//! A row is `sum(coeffs[v] * v) + constant REL 0` with `REL` either `<` or
//! `<=`. Eliminating a variable combines every lower-bound row with every
//! upper-bound row; the combination is strict exactly when at least one
//! parent is strict, so half-open regions (for instance `0 <= x < 1` boxes)
//! are decided without epsilon margins.
//!
//! Feasibility eliminates the variables in declaration order and checks the
//! variable-free residue. Witness extraction back-substitutes through the
//! elimination stages, picking the midpoint of each bounded interval
//! (`lower + 1`, `upper - 1`, or `0` when a side is missing), which makes
//! the returned point deterministic. Every witness is re-checked against
//! the original rows before it is returned.
//!
//! No redundancy elimination is performed beyond dropping duplicate rows;
//! the systems this crate solves are tiny (at most a handful of variables).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Strict (`<`) or non-strict (`<=`) comparison against zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Lt,
    Le,
}

impl Relation {
    /// The relation of a nonnegative combination of two rows.
    fn combine(self, other: Relation) -> Relation {
        if self == Relation::Lt || other == Relation::Lt {
            Relation::Lt
        } else {
            Relation::Le
        }
    }

    fn holds(self, value: &Rat) -> bool {
        match self {
            Relation::Lt => value.is_negative(),
            Relation::Le => !value.is_positive(),
        }
    }
}

/// One inequality `sum(coeffs[v] * v) + constant REL 0`.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality of rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinIneq {
    coeffs: BTreeMap<String, Rat>,
    constant: Rat,
    relation: Relation,
}

impl LinIneq {
    pub fn new<I, S>(terms: I, constant: Rat, relation: Relation) -> Self
    where
        I: IntoIterator<Item = (S, Rat)>,
        S: Into<String>,
    {
        let mut coeffs: BTreeMap<String, Rat> = BTreeMap::new();
        for (name, c) in terms {
            let name = name.into();
            assert!(!name.is_empty(), "empty variable name");
            let entry = coeffs.entry(name).or_insert_with(Rat::zero);
            *entry = &*entry + &c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LinIneq {
            coeffs,
            constant,
            relation,
        }
    }

    /// `sum(terms) + constant < 0`
    pub fn lt<I, S>(terms: I, constant: Rat) -> Self
    where
        I: IntoIterator<Item = (S, Rat)>,
        S: Into<String>,
    {
        LinIneq::new(terms, constant, Relation::Lt)
    }

    /// `sum(terms) + constant <= 0`
    pub fn le<I, S>(terms: I, constant: Rat) -> Self
    where
        I: IntoIterator<Item = (S, Rat)>,
        S: Into<String>,
    {
        LinIneq::new(terms, constant, Relation::Le)
    }

    pub fn coeff(&self, var: &str) -> Rat {
        self.coeffs.get(var).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.coeffs.keys().map(String::as_str)
    }

    /// Left-hand side with every variable substituted from `assignment`.
    ///
    /// Panics if a referenced variable is missing; rows never reference
    /// variables outside their system.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Rat>) -> Rat {
        let mut acc = self.constant.clone();
        for (var, c) in &self.coeffs {
            let v = assignment
                .get(var)
                .unwrap_or_else(|| panic!("no value for variable `{var}`"));
            acc = acc + c * v;
        }
        acc
    }

    pub fn holds(&self, assignment: &BTreeMap<String, Rat>) -> bool {
        self.relation.holds(&self.evaluate(assignment))
    }

    /// Normalize both rows to coefficient +1/-1 on `var` (positive scaling
    /// keeps each relation's direction) and add them, cancelling `var`.
    fn combine_on(&self, other: &LinIneq, var: &str) -> LinIneq {
        let a = self.coeff(var);
        let b = other.coeff(var);
        debug_assert!(a.is_positive() && b.is_negative());
        let inv_a = a.recip();
        let inv_b = (-b).recip();

        let mut coeffs: BTreeMap<String, Rat> = BTreeMap::new();
        for (name, c) in &self.coeffs {
            if name != var {
                coeffs.insert(name.clone(), c * &inv_a);
            }
        }
        for (name, c) in &other.coeffs {
            if name != var {
                let entry = coeffs.entry(name.clone()).or_insert_with(Rat::zero);
                *entry = &*entry + &(c * &inv_b);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());

        LinIneq {
            coeffs,
            constant: &self.constant * &inv_a + &other.constant * &inv_b,
            relation: self.relation.combine(other.relation),
        }
    }
}

impl fmt::Display for LinIneq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (var, c) in &self.coeffs {
            if first {
                if c == &Rat::from_int(1) {
                    write!(f, "{var}")?;
                } else if c == &Rat::from_int(-1) {
                    write!(f, "-{var}")?;
                } else {
                    write!(f, "{c}*{var}")?;
                }
                first = false;
            } else if c.is_negative() {
                if c == &Rat::from_int(-1) {
                    write!(f, " - {var}")?;
                } else {
                    write!(f, " - {}*{var}", -c)?;
                }
            } else if c == &Rat::from_int(1) {
                write!(f, " + {var}")?;
            } else {
                write!(f, " + {c}*{var}")?;
            }
        }
        if first {
            write!(f, "{}", self.constant)?;
        } else if !self.constant.is_zero() {
            if self.constant.is_negative() {
                write!(f, " - {}", -&self.constant)?;
            } else {
                write!(f, " + {}", self.constant)?;
            }
        }
        let rel = match self.relation {
            Relation::Lt => "<",
            Relation::Le => "<=",
        };
        write!(f, " {rel} 0")
    }
}

/// A satisfying assignment for a [`LinIneqSystem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    assignment: BTreeMap<String, Rat>,
}

impl Witness {
    pub fn new(assignment: BTreeMap<String, Rat>) -> Self {
        Witness { assignment }
    }

    pub fn get(&self, var: &str) -> Option<&Rat> {
        self.assignment.get(var)
    }

    pub fn assignment(&self) -> &BTreeMap<String, Rat> {
        &self.assignment
    }
}

/// An ordered list of variables plus the rows constraining them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinIneqSystem {
    vars: Vec<String>,
    rows: Vec<LinIneq>,
}

impl LinIneqSystem {
    /// Rejects rows that reference a variable missing from `vars`.
    pub fn new<S: Into<String>>(vars: Vec<S>, rows: Vec<LinIneq>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let declared: BTreeSet<&str> = vars.iter().map(String::as_str).collect();
        assert!(declared.len() == vars.len(), "duplicate variable name");
        for row in &rows {
            for var in row.variables() {
                if !declared.contains(var) {
                    return Err(Error::UnknownVariable(var.to_string()));
                }
            }
        }
        Ok(LinIneqSystem { vars, rows })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rows(&self) -> &[LinIneq] {
        &self.rows
    }

    /// True when every row holds under `witness`.
    pub fn check(&self, witness: &Witness) -> bool {
        self.rows.iter().all(|row| row.holds(witness.assignment()))
    }

    /// Project the solution set onto the remaining variables.
    ///
    /// Rows not involving `var` pass through; every (lower, upper) pair on
    /// `var` contributes one combined row. Duplicate rows are dropped,
    /// nothing else is simplified; trivially true residue rows such as
    /// `-1 < 0` stay.
    pub fn eliminate(&self, var: &str) -> Result<LinIneqSystem> {
        if !self.vars.iter().any(|v| v == var) {
            return Err(Error::UnknownVariable(var.to_string()));
        }

        let mut untouched = Vec::new();
        let mut uppers = Vec::new(); // positive coefficient on var
        let mut lowers = Vec::new(); // negative coefficient on var
        for row in &self.rows {
            let c = row.coeff(var);
            if c.is_zero() {
                untouched.push(row.clone());
            } else if c.is_positive() {
                uppers.push(row);
            } else {
                lowers.push(row);
            }
        }

        let mut rows = untouched;
        for upper in &uppers {
            for lower in &lowers {
                rows.push(upper.combine_on(lower, var));
            }
        }

        let mut seen = BTreeSet::new();
        rows.retain(|row| seen.insert(row.clone()));

        let vars = self.vars.iter().filter(|v| *v != var).cloned().collect();
        Ok(LinIneqSystem { vars, rows })
    }

    /// Decide whether some rational point satisfies every row.
    pub fn feasible(&self) -> bool {
        let mut sys = self.clone();
        for var in &self.vars {
            sys = sys.eliminate(var).expect("variable still present");
        }
        sys.residue_holds()
    }

    /// All rows of a variable-free system hold.
    fn residue_holds(&self) -> bool {
        debug_assert!(self.vars.is_empty());
        self.rows
            .iter()
            .all(|row| row.relation.holds(&row.constant))
    }

    /// Find a satisfying rational point, or `None` when the system is
    /// infeasible.
    ///
    /// The point is re-verified against every row before it is returned.
    pub fn find_witness(&self) -> Option<Witness> {
        let mut stages = vec![self.clone()];
        for var in &self.vars {
            let next = stages
                .last()
                .unwrap()
                .eliminate(var)
                .expect("variable still present");
            stages.push(next);
        }
        if !stages.last().unwrap().residue_holds() {
            return None;
        }

        let mut assignment: BTreeMap<String, Rat> = BTreeMap::new();
        for i in (0..self.vars.len()).rev() {
            let var = &self.vars[i];
            let value = stages[i].pick_value(var, &assignment);
            assignment.insert(var.clone(), value);
        }

        let witness = Witness::new(assignment);
        assert!(
            self.check(&witness),
            "back-substitution produced an invalid point for {self:?}"
        );
        Some(witness)
    }

    /// Interval for `var` once every other variable appearing in this
    /// stage's rows is fixed by `assignment`, and the deterministic pick
    /// inside it.
    fn pick_value(&self, var: &str, assignment: &BTreeMap<String, Rat>) -> Rat {
        // (bound, strict): for a lower bound the greatest wins, for an upper
        // bound the smallest; on ties a strict bound beats an attainable one.
        let mut lower: Option<(Rat, bool)> = None;
        let mut upper: Option<(Rat, bool)> = None;

        for row in &self.rows {
            let a = row.coeff(var);
            if a.is_zero() {
                continue;
            }
            let mut rest = row.constant.clone();
            for (name, c) in &row.coeffs {
                if name != var {
                    rest = rest + c * &assignment[name];
                }
            }
            let bound = -rest / a.clone();
            let strict = row.relation == Relation::Lt;
            if a.is_positive() {
                upper = match upper {
                    None => Some((bound, strict)),
                    Some((b, s)) => {
                        if bound < b || (bound == b && strict) {
                            Some((bound, strict))
                        } else {
                            Some((b, s))
                        }
                    }
                };
            } else {
                lower = match lower {
                    None => Some((bound, strict)),
                    Some((b, s)) => {
                        if bound > b || (bound == b && strict) {
                            Some((bound, strict))
                        } else {
                            Some((b, s))
                        }
                    }
                };
            }
        }

        match (lower, upper) {
            (None, None) => Rat::zero(),
            (Some((lo, _)), None) => lo + Rat::one(),
            (None, Some((hi, _))) => hi - Rat::one(),
            (Some((lo, lo_strict)), Some((hi, hi_strict))) => {
                // Fourier–Motzkin guarantees the interval is nonempty here.
                assert!(
                    lo < hi || (lo == hi && !lo_strict && !hi_strict),
                    "empty interval for {var}: {lo} .. {hi}"
                );
                (lo + hi) / Rat::from_int(2)
            }
        }
    }
}
