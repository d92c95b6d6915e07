//! Gelfand-Tsetlin patterns for the chain Spin(r) > Spin(r-1) > ... > Spin(2).
//!
//! Row q_m (level m) has floor((m+1)/2) entries. Odd levels 2i-1 are type D
//! (the last entry carries a sign), even levels 2i are type B.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::HalfInt;
use crate::error::{shape, Error, Result};

pub const fn row_len(level: usize) -> usize {
    (level + 1) / 2
}

/// Dominant integral weight of Spin(r); `r = 1` is the trivial group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpinWeight {
    pub r: usize,
    pub entries: Vec<HalfInt>,
}

impl SpinWeight {
    pub fn new(r: usize, entries: Vec<HalfInt>) -> Result<Self> {
        let w = SpinWeight { r, entries };
        w.check()?;
        Ok(w)
    }

    pub fn from_twice(r: usize, twice: &[i64]) -> Result<Self> {
        Self::new(r, twice.iter().map(|&t| HalfInt::from_twice(t)).collect())
    }

    pub fn from_ints(r: usize, v: &[i64]) -> Result<Self> {
        Self::new(r, v.iter().map(|&t| HalfInt::from_int(t)).collect())
    }

    pub fn zero(r: usize) -> Self {
        SpinWeight { r, entries: vec![HalfInt::ZERO; r / 2] }
    }

    pub fn rank(&self) -> usize {
        self.r / 2
    }

    fn check(&self) -> Result<()> {
        if self.r == 0 {
            return shape("Spin(0) is not a group in this chain");
        }
        if self.entries.len() != self.r / 2 {
            return shape(format!(
                "Spin({}) weight needs {} entries, got {}",
                self.r,
                self.r / 2,
                self.entries.len()
            ));
        }
        if !common_class(&self.entries) {
            return Err(Error::Domain(format!("mixed integrality in {self}")));
        }
        if !self.is_dominant() {
            return Err(Error::Domain(format!("{self} is not dominant for Spin({})", self.r)));
        }
        Ok(())
    }

    pub fn is_dominant(&self) -> bool {
        dominant(self.r, &self.entries)
    }

    /// lambda + eps_k (k > 0), lambda - eps_|k| (k < 0), lambda (k = 0); no dominance check.
    pub fn shifted(&self, k: i64) -> SpinWeight {
        let mut e = self.entries.clone();
        if k != 0 {
            e[k.unsigned_abs() as usize - 1] += k.signum();
        }
        SpinWeight { r: self.r, entries: e }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.first().map_or(true, |x| x.is_integer())
    }
}

impl fmt::Display for SpinWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SpinWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spin({}){}", self.r, self)
    }
}

fn common_class(v: &[HalfInt]) -> bool {
    v.windows(2).all(|w| w[0].same_class(w[1]))
}

fn dominant(r: usize, e: &[HalfInt]) -> bool {
    let n = e.len();
    if n == 0 || r == 2 {
        return true;
    }
    if e.windows(2).take(n - 1).any(|w| w[0] < w[1]) {
        return false;
    }
    if r % 2 == 0 {
        n < 2 || e[n - 2] >= e[n - 1].abs()
    } else {
        e[n - 1] >= HalfInt::ZERO
    }
}

/// Interlacing between row `upper` at level m and row `lower` at level m-1.
pub fn interlaces(m: usize, upper: &[HalfInt], lower: &[HalfInt]) -> bool {
    if m % 2 == 1 {
        let i = (m - 1) / 2;
        (1..i).all(|j| upper[j - 1] >= lower[j - 1] && lower[j - 1] >= upper[j])
            && (i == 0 || (upper[i - 1] >= lower[i - 1] && lower[i - 1] >= upper[i].abs()))
    } else {
        let i = m / 2;
        (1..i).all(|j| upper[j - 1] >= lower[j - 1] && lower[j - 1] >= upper[j])
            && upper[i - 1] >= lower[i - 1]
            && lower[i - 1] >= -upper[i - 1]
    }
}

/// All rows at level m-1 interlacing `upper` at level m, in lexicographic order.
pub fn rows_below(m: usize, upper: &[HalfInt]) -> Vec<Vec<HalfInt>> {
    let len = row_len(m - 1);
    let mut bounds = Vec::with_capacity(len);
    for j in 1..=len {
        let hi = upper[j - 1];
        let lo = if m % 2 == 1 {
            let i = (m - 1) / 2;
            if j < i {
                upper[j]
            } else {
                upper[i].abs()
            }
        } else {
            let i = m / 2;
            if j < i {
                upper[j]
            } else {
                -upper[i - 1]
            }
        };
        if lo > hi {
            return Vec::new();
        }
        bounds.push((lo, hi));
    }
    let mut out = Vec::new();
    let mut cur: Vec<HalfInt> = bounds.iter().map(|b| b.0).collect();
    if len == 0 {
        return vec![Vec::new()];
    }
    loop {
        out.push(cur.clone());
        // odometer increment from the last position
        let mut p = len;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if cur[p] < bounds[p].1 {
                cur[p] += 1;
                for (q, b) in bounds.iter().enumerate().skip(p + 1) {
                    cur[q] = b.0;
                }
                break;
            }
        }
    }
}

/// Read access to the rows of a (full or partial) pattern by level.
pub trait PatternRows: Clone {
    /// Row at `level`; `None` when that level is not stored.
    fn row(&self, level: usize) -> Option<&[HalfInt]>;
    fn row_mut(&mut self, level: usize) -> Option<&mut Vec<HalfInt>>;
    /// Whether all interlacing and integrality conditions between stored rows hold.
    fn is_valid(&self) -> bool;

    /// sigma_{level, j}: add sgn(j) to entry |j| of the row at `level`.
    fn shifted(&self, level: usize, j: i64) -> Self {
        let mut out = self.clone();
        if j != 0 {
            let row = out.row_mut(level).expect("shift on a stored row");
            row[j.unsigned_abs() as usize - 1] += j.signum();
        }
        out
    }

    /// l_{level, j}(Q). Level 0 and index 0 give 0.
    fn l(&self, level: usize, j: i64) -> HalfInt {
        if level == 0 || j == 0 {
            return HalfInt::ZERO;
        }
        let row = self.row(level).unwrap_or_else(|| panic!("level {level} not stored"));
        let a = j.unsigned_abs() as usize;
        let q = row[a - 1];
        if level % 2 == 1 {
            let i = (level + 1) / 2;
            let v = q + (i as i64 - a as i64);
            if j > 0 {
                v
            } else {
                -v
            }
        } else {
            let i = level / 2;
            let v = q + (i as i64 + 1 - a as i64);
            if j > 0 {
                v
            } else {
                -v + 1
            }
        }
    }
}

/// Full GT pattern; `rows[m-1]` is q_m, the last row is the highest weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GTPattern {
    pub rows: Vec<Vec<HalfInt>>,
}

impl GTPattern {
    pub fn r(&self) -> usize {
        self.rows.len() + 1
    }

    pub fn top(&self) -> &[HalfInt] {
        self.rows.last().map_or(&[], |v| v.as_slice())
    }
}

impl PatternRows for GTPattern {
    fn row(&self, level: usize) -> Option<&[HalfInt]> {
        if level == 0 {
            return None;
        }
        self.rows.get(level - 1).map(|v| v.as_slice())
    }

    fn row_mut(&mut self, level: usize) -> Option<&mut Vec<HalfInt>> {
        if level == 0 {
            return None;
        }
        self.rows.get_mut(level - 1)
    }

    fn is_valid(&self) -> bool {
        validate_rows(&self.rows)
    }
}

impl fmt::Debug for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GT{:?}", self.rows)
    }
}

fn validate_rows(rows: &[Vec<HalfInt>]) -> bool {
    let all: Vec<HalfInt> = rows.iter().flatten().copied().collect();
    if !common_class(&all) {
        return false;
    }
    (2..=rows.len()).all(|m| interlaces(m, &rows[m - 1], &rows[m - 2]))
}

/// Checks the pattern conditions; rows are q_1, ..., q_{r-1}.
pub fn validate_pattern(rows: &[Vec<HalfInt>]) -> Result<bool> {
    for (idx, row) in rows.iter().enumerate() {
        if row.len() != row_len(idx + 1) {
            return shape(format!(
                "row q_{} has {} entries, expected {}",
                idx + 1,
                row.len(),
                row_len(idx + 1)
            ));
        }
    }
    Ok(validate_rows(rows))
}

/// All GT patterns with top row lambda, lexicographic with the bottom row first.
pub fn enumerate_patterns(lambda: &SpinWeight) -> Vec<GTPattern> {
    let r = lambda.r;
    if r <= 1 {
        return vec![GTPattern { rows: Vec::new() }];
    }
    // stack[m] holds the row at level m (1-based), filled top-down
    let mut out = Vec::new();
    let mut rows: Vec<Vec<HalfInt>> = vec![Vec::new(); r - 1];
    rows[r - 2] = lambda.entries.clone();
    fill(r - 1, &mut rows, &mut out);
    out.sort();
    out
}

fn fill(level: usize, rows: &mut Vec<Vec<HalfInt>>, out: &mut Vec<GTPattern>) {
    if level == 1 {
        out.push(GTPattern { rows: rows.clone() });
        return;
    }
    for below in rows_below(level, &rows[level - 1]) {
        rows[level - 2] = below;
        fill(level - 1, rows, out);
    }
}

pub fn dimension(lambda: &SpinWeight) -> u64 {
    // count without materializing patterns
    fn count(level: usize, row: &[HalfInt]) -> u64 {
        if level <= 1 {
            return 1;
        }
        rows_below(level, row).iter().map(|b| count(level - 1, b)).sum()
    }
    if lambda.r <= 1 {
        return 1;
    }
    count(lambda.r - 1, &lambda.entries)
}

/// Restriction Spin(r) -> Spin(r-1): the weights interlacing lambda.
pub fn branch(lambda: &SpinWeight) -> Result<Vec<SpinWeight>> {
    if lambda.r < 3 {
        return Err(Error::Domain("branching needs r >= 3".into()));
    }
    Ok(rows_below(lambda.r - 1, &lambda.entries)
        .into_iter()
        .map(|e| SpinWeight { r: lambda.r - 1, entries: e })
        .collect())
}

/// lambda* = (lambda_1, ..., (-1)^n lambda_n) for r = 2n; identity for odd r.
pub fn dualize(lambda: &SpinWeight) -> SpinWeight {
    let mut w = lambda.clone();
    if w.r % 2 == 0 && (w.r / 2) % 2 == 1 {
        if let Some(last) = w.entries.last_mut() {
            *last = -*last;
        }
    }
    w
}

/// Q* for Spin(2n): the last entry of each D-type row q_{2i-1} is multiplied by (-1)^i.
pub fn dualize_pattern(q: &GTPattern) -> GTPattern {
    let mut out = q.clone();
    if q.r() % 2 == 0 {
        for (idx, row) in out.rows.iter_mut().enumerate() {
            let level = idx + 1;
            if level % 2 == 1 && ((level + 1) / 2) % 2 == 1 {
                if let Some(last) = row.last_mut() {
                    *last = -*last;
                }
            }
        }
    }
    out
}

/// The top three rows (gamma*, q_{r-2}, lambda*) of a Spin(r) pattern.
/// For r = 3 the gamma row is absent (Spin(1) is trivial).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PartialGTPattern {
    pub r: usize,
    pub gamma: Vec<HalfInt>,
    pub mid: Vec<HalfInt>,
    pub top: Vec<HalfInt>,
}

impl PartialGTPattern {
    pub fn top_level(&self) -> usize {
        self.r - 1
    }

    pub fn mid_level(&self) -> usize {
        self.r - 2
    }
}

impl PatternRows for PartialGTPattern {
    fn row(&self, level: usize) -> Option<&[HalfInt]> {
        if level == 0 {
            None
        } else if level == self.r - 1 {
            Some(&self.top)
        } else if level == self.r - 2 {
            Some(&self.mid)
        } else if level + 3 == self.r {
            Some(&self.gamma)
        } else {
            None
        }
    }

    fn row_mut(&mut self, level: usize) -> Option<&mut Vec<HalfInt>> {
        if level == 0 {
            None
        } else if level == self.r - 1 {
            Some(&mut self.top)
        } else if level == self.r - 2 {
            Some(&mut self.mid)
        } else if level + 3 == self.r {
            Some(&mut self.gamma)
        } else {
            None
        }
    }

    fn is_valid(&self) -> bool {
        let all: Vec<HalfInt> = self.gamma.iter().chain(&self.mid).chain(&self.top).copied().collect();
        common_class(&all)
            && interlaces(self.r - 1, &self.top, &self.mid)
            && (self.r < 4 || interlaces(self.r - 2, &self.mid, &self.gamma))
    }
}

impl fmt::Debug for PartialGTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[{:?} | {:?} | {:?}]", self.gamma, self.mid, self.top)
    }
}

/// Basis of Hom_{M}(V_lambda, V_gamma) indexed by (gamma*, q_{r-2}, lambda*),
/// ordered by the middle row.
pub fn enumerate_partial(lambda: &SpinWeight, gamma: &SpinWeight) -> Result<Vec<PartialGTPattern>> {
    let r = lambda.r;
    if r < 3 || gamma.r + 2 != r {
        return shape(format!("need Spin(r) and Spin(r-2) weights, got r={} and {}", r, gamma.r));
    }
    let top = dualize(lambda).entries;
    let g = dualize(gamma).entries;
    let mut out: Vec<PartialGTPattern> = rows_below(r - 1, &top)
        .into_iter()
        .map(|mid| PartialGTPattern { r, gamma: g.clone(), mid, top: top.clone() })
        .filter(|p| p.is_valid())
        .collect();
    out.sort();
    Ok(out)
}
