//! so(r) action on GT bases: coefficients a_{p,q}(Q), chain generators
//! A_{p+1,p}, the remaining A_{p,q} by brackets, and the Casimir.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{rat_int, Gauss, Rational};
use crate::error::{Error, Result};
use crate::gt::{enumerate_patterns, row_len, GTPattern, PatternRows, SpinWeight};

/// Admissible second indices at a level: +-1..+-i, plus 0 on even levels.
pub fn shift_indices(level: usize) -> Vec<i64> {
    let i = if level % 2 == 1 { (level + 1) / 2 } else { level / 2 } as i64;
    let mut v: Vec<i64> = (1..=i).flat_map(|m| [m, -m]).collect();
    if level % 2 == 0 {
        v.push(0);
    }
    v
}

fn sgn(x: i64) -> i64 {
    x.signum()
}

fn pm(upto: usize) -> impl Iterator<Item = i64> {
    (1..=upto as i64).flat_map(|m| [m, -m])
}

/// Radicand and sign of a_{level,j}(Q), without any validity guard.
///
/// With `reduced`, the product over row level+1 is dropped and that row's
/// entry in the j = 0 sign is replaced by 1. Used at the top level of a
/// partial pattern, where row level+1 does not exist.
/// A zero sign gives `Some((0, 0))`; a vanishing denominator gives `None`.
pub(crate) fn radicand<P: PatternRows>(q: &P, level: usize, j: i64, reduced: bool) -> Option<(i64, Rational)> {
    let lj = q.l(level, j).to_rational();
    let lv = |lev: usize, k: i64| q.l(lev, k).to_rational();
    let mut num = Rational::one();
    let mut den;
    let sign;
    if level % 2 == 1 {
        let i = (level + 1) / 2;
        for k in pm(i - 1) {
            num *= &lj + lv(level - 1, k);
        }
        if !reduced {
            for k in pm(i) {
                num *= &lj + lv(level + 1, k);
            }
        }
        den = rat_int(4);
        for k in pm(i).filter(|k| k.abs() != j.abs()) {
            let s = &lj + lv(level, k);
            den *= &s * (&s + Rational::one());
        }
        sign = sgn(j);
    } else {
        let i = level / 2;
        if j == 0 {
            let lo = q.row(level - 1).map_or(1, |row| row[i - 1].signum());
            let hi = if reduced { 1 } else { q.row(level + 1).expect("upper row")[i].signum() };
            sign = lo * hi;
            if sign == 0 {
                return Some((0, Rational::zero()));
            }
        } else {
            sign = sgn(j);
        }
        for k in pm(i) {
            num *= &lj + lv(level - 1, k);
        }
        if !reduced {
            for k in pm(i + 1) {
                num *= &lj + lv(level + 1, k);
            }
        }
        den = rat_int(4) * &lj * &lj - Rational::one();
        for k in std::iter::once(0).chain(pm(i)).filter(|k| *k != j && *k != -j) {
            let lk = lv(level, k);
            den *= (&lj + &lk) * (&lj - &lk);
        }
    }
    if den.is_zero() {
        return None;
    }
    Some((sign, -num / den))
}

/// a_{level,j}(Q) for a pattern that stores rows level-1 (if level > 1), level, level+1.
/// Zero when sigma_{level,j}Q is not a valid pattern.
pub fn coeff_generic<P: PatternRows>(q: &P, level: usize, j: i64) -> Result<Gauss> {
    if level == 0 {
        return Err(Error::Domain("coefficients start at level 1".into()));
    }
    if j.unsigned_abs() as usize > row_len(level) || (j == 0 && level % 2 == 1) {
        return Err(Error::Domain(format!("index {j} not admissible at level {level}")));
    }
    if !q.shifted(level, j).is_valid() {
        return Ok(Gauss::zero());
    }
    let Some((sign, rad)) = radicand(q, level, j, false) else {
        return Err(Error::Consistency(format!("zero denominator in a_{{{level},{j}}} on a valid shift")));
    };
    if sign == 0 {
        return Ok(Gauss::zero());
    }
    let imaginary_expected = level % 2 == 0 && j == 0;
    if !imaginary_expected && rad.is_negative() {
        return Err(Error::Consistency(format!("negative radicand {rad} in a_{{{level},{j}}} on a valid shift")));
    }
    if imaginary_expected && rad.is_positive() {
        return Err(Error::Consistency(format!("positive radicand {rad} in a_{{{level},0}}")));
    }
    Ok(Gauss::signed_sqrt(sign, &rad))
}

pub fn coeff_a(level: usize, j: i64, q: &GTPattern) -> Result<Gauss> {
    if level + 2 > q.r() {
        return Err(Error::Domain(format!("level {level} out of range for Spin({})", q.r())));
    }
    coeff_generic(q, level, j)
}

/// Sparse square matrix over Gauss, stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub dim: usize,
    rows: Vec<BTreeMap<usize, Gauss>>,
}

impl SparseMatrix {
    pub fn zeros(dim: usize) -> Self {
        SparseMatrix { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn get(&self, i: usize, j: usize) -> Gauss {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Gauss) {
        if v.is_zero() {
            return;
        }
        let e = self.rows[i].entry(j).or_default();
        *e += v;
        if e.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Gauss)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn mul(&self, o: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in &o.rows[*k] {
                    out.add_at(i, *j, &(a * b));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        for (i, j, v) in o.entries() {
            out.add_at(i, j, v);
        }
        out
    }

    pub fn sub(&self, o: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        for (i, j, v) in o.entries() {
            out.add_at(i, j, &-v);
        }
        out
    }

    pub fn commutator(&self, o: &SparseMatrix) -> SparseMatrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn conj_transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim);
        for (i, j, v) in self.entries() {
            out.add_at(j, i, &v.conj());
        }
        out
    }

    /// M + M^H = 0.
    pub fn is_skew_hermitian(&self) -> bool {
        self.add(&self.conj_transpose()).is_zero()
    }

    /// Some(c) when the matrix equals c * I.
    pub fn as_scalar(&self) -> Option<Gauss> {
        let c = self.get(0, 0);
        let ok = self.rows.iter().enumerate().all(|(i, row)| {
            row.keys().all(|j| *j == i) && (c.is_zero() && row.is_empty() || row.get(&i) == Some(&c))
        });
        ok.then_some(c)
    }

    pub fn to_dense_f64(&self) -> Vec<Vec<(f64, f64)>> {
        let mut d = vec![vec![(0.0, 0.0); self.dim]; self.dim];
        for (i, j, v) in self.entries() {
            d[i][j] = v.to_f64_pair();
        }
        d
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix({}x{})", self.dim, self.dim)?;
        for (i, j, v) in self.entries() {
            writeln!(f, "  [{i},{j}] = {v}")?;
        }
        Ok(())
    }
}

/// tau_lambda(A_{p,q}) on the GT basis of lambda.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub lambda: SpinWeight,
    pub p: usize,
    pub q: usize,
    pub matrix: SparseMatrix,
}

/// Basis and generator cache for one irreducible.
pub struct Representation {
    pub lambda: SpinWeight,
    pub basis: Vec<GTPattern>,
    index: HashMap<GTPattern, usize>,
    gens: HashMap<(usize, usize), SparseMatrix>,
}

impl Representation {
    pub fn new(lambda: &SpinWeight) -> Self {
        let basis = enumerate_patterns(lambda);
        let index = basis.iter().enumerate().map(|(i, q)| (q.clone(), i)).collect();
        Representation { lambda: lambda.clone(), basis, index, gens: HashMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, q: &GTPattern) -> Option<usize> {
        self.index.get(q).copied()
    }

    /// tau(A_{p+1,p}); acts through row shifts at level p-1 (level 0: diagonal i*q_{1,1}).
    pub fn chain(&mut self, p: usize) -> Result<&SparseMatrix> {
        let r = self.lambda.r;
        if p == 0 || p + 1 > r {
            return Err(Error::Domain(format!("A_{{{},{}}} is not a generator of so({r})", p + 1, p)));
        }
        if !self.gens.contains_key(&(p + 1, p)) {
            let m = self.build_chain(p)?;
            self.gens.insert((p + 1, p), m);
        }
        Ok(&self.gens[&(p + 1, p)])
    }

    fn build_chain(&self, p: usize) -> Result<SparseMatrix> {
        let level = p - 1;
        let mut m = SparseMatrix::zeros(self.dim());
        for (col, q) in self.basis.iter().enumerate() {
            if level == 0 {
                let v = Gauss::imag(crate::arith::SqrtRatSum::from_rational(q.rows[0][0].to_rational()));
                m.add_at(col, col, &v);
                continue;
            }
            for j in shift_indices(level) {
                let c = coeff_generic(q, level, j)?;
                if c.is_zero() {
                    continue;
                }
                let target = q.shifted(level, j);
                let row = self
                    .index_of(&target)
                    .ok_or_else(|| Error::Consistency(format!("shift of {q:?} left the basis")))?;
                m.add_at(row, col, &c);
            }
        }
        Ok(m)
    }

    /// tau(A_{p,q}) for p > q, via [A_{p,p-1}, A_{p-1,q}] = A_{p,q}.
    pub fn generator(&mut self, p: usize, q: usize) -> Result<&SparseMatrix> {
        if !(p > q && q >= 1 && p <= self.lambda.r) {
            return Err(Error::Domain(format!("A_{{{p},{q}}} needs r >= p > q >= 1")));
        }
        if p == q + 1 {
            return self.chain(q);
        }
        if !self.gens.contains_key(&(p, q)) {
            let x = self.chain(p - 1)?.clone();
            let y = self.generator(p - 1, q)?.clone();
            self.gens.insert((p, q), x.commutator(&y));
        }
        Ok(&self.gens[&(p, q)])
    }

    /// A_{a,b} with the convention A_{b,a} = -A_{a,b}, A_{a,a} = 0.
    pub fn signed_generator(&mut self, a: usize, b: usize) -> Result<SparseMatrix> {
        use std::cmp::Ordering::*;
        Ok(match a.cmp(&b) {
            Equal => SparseMatrix::zeros(self.dim()),
            Greater => self.generator(a, b)?.clone(),
            Less => {
                let m = self.generator(b, a)?.clone();
                SparseMatrix::zeros(self.dim()).sub(&m)
            }
        })
    }

    /// Sum of tau(A_{p,q})^2 over p > q.
    pub fn casimir_matrix(&mut self) -> Result<SparseMatrix> {
        let r = self.lambda.r;
        let mut acc = SparseMatrix::zeros(self.dim());
        for p in 2..=r {
            for q in 1..p {
                let g = self.generator(p, q)?.clone();
                acc = acc.add(&g.mul(&g));
            }
        }
        Ok(acc)
    }
}

pub fn chain_generator(lambda: &SpinWeight, p: usize) -> Result<GeneratorMatrix> {
    let mut rep = Representation::new(lambda);
    let matrix = rep.chain(p)?.clone();
    Ok(GeneratorMatrix { lambda: lambda.clone(), p: p + 1, q: p, matrix })
}

pub fn full_generator(lambda: &SpinWeight, p: usize, q: usize) -> Result<GeneratorMatrix> {
    let mut rep = Representation::new(lambda);
    let matrix = rep.generator(p, q)?.clone();
    Ok(GeneratorMatrix { lambda: lambda.clone(), p, q, matrix })
}

/// The scalar by which sum_{p>q} tau(A_{p,q})^2 acts.
pub fn casimir_scalar(lambda: &SpinWeight) -> Result<Rational> {
    let mut rep = Representation::new(lambda);
    let m = rep.casimir_matrix()?;
    m.as_scalar()
        .and_then(|c| c.as_rational())
        .ok_or_else(|| Error::Consistency(format!("Casimir is not a rational scalar on {lambda}")))
}
