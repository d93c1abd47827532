//! Exact linear feasibility: find `x` with `A x = b` and `x_i >= 0` on a chosen
//! index set, or prove that no such point exists.
//!
//! Phase one of the simplex method over the rationals, with Bland's rule so the
//! pivoting cannot cycle. Free variables are split as `x = x+ - x-`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Point(Vec<Scalar>),
    Infeasible,
}

impl Feasibility {
    pub fn point(&self) -> Option<&[Scalar]> {
        match self {
            Feasibility::Point(p) => Some(p),
            Feasibility::Infeasible => None,
        }
    }
}

pub fn linear_feasibility(
    eq: &Matrix,
    b: &[Scalar],
    nonneg: &[usize],
) -> Result<Feasibility, Error> {
    if eq.field() != FieldSpec::Rationals {
        return Err(Error::RequiresRationals);
    }
    if b.len() != eq.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {}, constraint matrix has {} rows",
            b.len(),
            eq.rows()
        )));
    }
    if let Some(&bad) = nonneg.iter().find(|&&i| i >= eq.cols()) {
        return Err(Error::DimensionMismatch(format!(
            "sign constraint on variable {bad} of {}",
            eq.cols()
        )));
    }

    let q = |s: &Scalar| s.as_rational().expect("rational field").clone();
    let rows = eq.rows();
    let n = eq.cols();

    // column layout: one column per original variable, then one extra
    // (negative part) per free variable, then one artificial per row
    let mut split: Vec<(usize, BigRational)> = Vec::new();
    for j in 0..n {
        split.push((j, BigRational::from_integer(1.into())));
    }
    for j in (0..n).filter(|j| !nonneg.contains(j)) {
        split.push((j, BigRational::from_integer((-1).into())));
    }
    let structural = split.len();
    let width = structural + rows;

    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = vec![BigRational::zero(); width];
        for (c, (j, s)) in split.iter().enumerate() {
            row[c] = q(&eq[(r, *j)]) * s;
        }
        let mut rv = q(&b[r]);
        if rv.is_negative() {
            row.iter_mut().for_each(|v| *v = -v.clone());
            rv = -rv;
        }
        row[structural + r] = BigRational::from_integer(1.into());
        tab.push(row);
        rhs.push(rv);
    }
    let mut basis: Vec<usize> = (structural..width).collect();

    // reduced costs for minimizing the sum of artificials
    let mut cost = vec![BigRational::zero(); width];
    let mut objective = BigRational::zero();
    for r in 0..rows {
        for c in 0..structural {
            cost[c] -= &tab[r][c];
        }
        objective -= &rhs[r];
    }

    while let Some(enter) = (0..width).find(|&c| cost[c].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if !tab[r][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[r] / &tab[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // phase one is bounded below by zero, so an entering column always has a positive entry
        let (pr, _) = leave.expect("phase-one objective is bounded");
        let piv = tab[pr][enter].clone();
        for v in tab[pr].iter_mut() {
            *v = &*v / &piv;
        }
        rhs[pr] = &rhs[pr] / &piv;
        let pivot_row = tab[pr].clone();
        let pivot_rhs = rhs[pr].clone();
        for r in 0..rows {
            if r == pr || tab[r][enter].is_zero() {
                continue;
            }
            let f = tab[r][enter].clone();
            for (v, p) in tab[r].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            rhs[r] -= &f * &pivot_rhs;
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (v, p) in cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            objective -= &f * &pivot_rhs;
        }
        basis[pr] = enter;
    }

    if !objective.is_zero() {
        return Ok(Feasibility::Infeasible);
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &var) in basis.iter().enumerate() {
        if var < structural {
            let (j, s) = &split[var];
            x[*j] += &rhs[r] * s;
        }
    }
    Ok(Feasibility::Point(x.into_iter().map(Scalar::Q).collect()))
}
