//! Exact linear feasibility by Fourier–Motzkin elimination, supporting
//! strict and non-strict inequalities.

use num::{BigRational, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `a·x ≥ b`
    Geq,
    /// `a·x > b`
    Gt,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) -> Self {
        Constraint { coeffs, relation, rhs }
    }

    /// Homogeneous `a·x ≥ 0` or `a·x > 0` from integer coefficients.
    pub fn homogeneous(coeffs: &[i64], relation: Relation) -> Self {
        Self::new(
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            relation,
            BigRational::zero(),
        )
    }

    pub fn is_satisfied(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Geq => lhs >= self.rhs,
            Relation::Gt => lhs > self.rhs,
        }
    }

    fn scaled(&self, s: &BigRational) -> Self {
        Constraint {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            relation: self.relation,
            rhs: &self.rhs * s,
        }
    }
}

/// Sum of two constraints; strict if either is.
fn combine(a: &Constraint, b: &Constraint) -> Constraint {
    Constraint {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        relation: if a.relation == Relation::Gt || b.relation == Relation::Gt {
            Relation::Gt
        } else {
            Relation::Geq
        },
        rhs: &a.rhs + &b.rhs,
    }
}

/// Scale so that the first nonzero coefficient is `±1`; constraints that
/// differ by a positive factor become equal.
fn normalize(c: Constraint) -> Constraint {
    match c.coeffs.iter().find(|a| !a.is_zero()) {
        Some(lead) => {
            let s = lead.abs().recip();
            c.scaled(&s)
        }
        None => c,
    }
}

fn dedup(cs: &mut Vec<Constraint>) {
    let mut seen = std::collections::HashSet::new();
    cs.retain(|c| seen.insert(c.clone()));
    // a strict copy makes the non-strict copy of the same row redundant
    let stricts: std::collections::HashSet<(Vec<BigRational>, BigRational)> = cs
        .iter()
        .filter(|c| c.relation == Relation::Gt)
        .map(|c| (c.coeffs.clone(), c.rhs.clone()))
        .collect();
    cs.retain(|c| c.relation == Relation::Gt || !stricts.contains(&(c.coeffs.clone(), c.rhs.clone())));
}

/// Whether some `x ∈ Q^dim` satisfies every constraint.
pub fn is_feasible(constraints: &[Constraint], dim: usize) -> bool {
    let mut cs: Vec<Constraint> = constraints
        .iter()
        .map(|c| {
            assert_eq!(c.coeffs.len(), dim, "constraint dimension");
            normalize(c.clone())
        })
        .collect();
    dedup(&mut cs);
    for k in 0..dim {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in cs {
            if c.coeffs[k].is_positive() {
                let s = c.coeffs[k].recip();
                lower.push(c.scaled(&s));
            } else if c.coeffs[k].is_negative() {
                let s = -c.coeffs[k].recip();
                upper.push(c.scaled(&s));
            } else {
                rest.push(c);
            }
        }
        for l in &lower {
            for u in &upper {
                rest.push(normalize(combine(l, u)));
            }
        }
        cs = rest;
        dedup(&mut cs);
    }
    cs.iter().all(|c| match c.relation {
        Relation::Geq => !c.rhs.is_positive(),
        Relation::Gt => c.rhs.is_negative(),
    })
}

/// Indices of the inequalities that hold with equality on the whole
/// solution set of the homogeneous system `ℓ_k(x) ≥ 0`.
pub fn implicit_equalities(functionals: &[Vec<i64>], dim: usize) -> Vec<usize> {
    let base: Vec<Constraint> = functionals
        .iter()
        .map(|f| Constraint::homogeneous(f, Relation::Geq))
        .collect();
    (0..functionals.len())
        .filter(|&k| {
            let mut cs = base.clone();
            cs.push(Constraint::homogeneous(&functionals[k], Relation::Gt));
            !is_feasible(&cs, dim)
        })
        .collect()
}
