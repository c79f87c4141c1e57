use super::int::Int;

/// Row-major integer matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense<T> {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<T>>,
}

impl<T: Int> Dense<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Dense { rows, cols, a: vec![vec![T::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.a[i][i] = T::from_i64(1);
        }
        m
    }

    pub fn from_columns(rows: usize, cols: &[Vec<(usize, T)>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c {
                m.a[*i][j] = x.clone();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<(usize, T)> {
        (0..self.rows).filter(|&i| !self.a[i][j].is_zero()).map(|i| (i, self.a[i][j].clone())).collect()
    }

    fn row_axpy(&mut self, dst: usize, c: &T, src: usize) -> Option<()> {
        for j in 0..self.cols {
            if !self.a[src][j].is_zero() {
                let v = self.a[dst][j].sub(&c.mul(&self.a[src][j])?)?;
                self.a[dst][j] = v;
            }
        }
        Some(())
    }

    fn col_axpy(&mut self, dst: usize, c: &T, src: usize) -> Option<()> {
        for i in 0..self.rows {
            if !self.a[i][src].is_zero() {
                let v = self.a[i][dst].sub(&c.mul(&self.a[i][src])?)?;
                self.a[i][dst] = v;
            }
        }
        Some(())
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        for row in &mut self.a {
            row.swap(x, y);
        }
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ...`, all positive.
pub fn invariant_factors<T: Int>(mut m: Dense<T>) -> Option<Vec<T>> {
    let (r, c) = (m.rows, m.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < r.min(c) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = &m.a[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs_lt(&m.a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.a.swap(t, bi);
        m.swap_cols(t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if !m.a[i][t].is_zero() {
                    let (q, rem) = m.a[i][t].div_rem(&m.a[t][t])?;
                    m.row_axpy(i, &q, t)?;
                    if !rem.is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !m.a[t][j].is_zero() {
                    let (q, rem) = m.a[t][j].div_rem(&m.a[t][t])?;
                    m.col_axpy(j, &q, t)?;
                    if !rem.is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                let bad = (t + 1..r).find(|&i| {
                    (t + 1..c).any(|j| m.a[i][j].div_rem(&m.a[t][t]).is_none_or(|(_, rem)| !rem.is_zero()))
                });
                match bad {
                    None => break,
                    Some(i) => {
                        m.row_axpy(t, &T::from_i64(-1), i)?;
                        continue;
                    }
                }
            }
            // Move the smallest entry of row/column t onto the pivot.
            let mut best = (t, t);
            for i in t + 1..r {
                if !m.a[i][t].is_zero() && m.a[i][t].abs_lt(&m.a[best.0][best.1]) {
                    best = (i, t);
                }
            }
            for j in t + 1..c {
                if !m.a[t][j].is_zero() && m.a[t][j].abs_lt(&m.a[best.0][best.1]) {
                    best = (t, j);
                }
            }
            m.a.swap(t, best.0);
            m.swap_cols(t, best.1);
        }
        diag.push(m.a[t][t].abs()?);
        t += 1;
    }
    Some(diag)
}

/// Column echelon form `E = A U` with `U` unimodular. Returns `(E, U, p)`:
/// columns `0..p` of `E` are nonzero with strictly increasing pivot rows,
/// columns `p..` are zero, so the matching columns of `U` span the kernel.
pub fn column_echelon<T: Int>(mut m: Dense<T>) -> Option<(Dense<T>, Dense<T>, usize)> {
    let mut u = Dense::identity(m.cols);
    let mut p = 0;
    for i in 0..m.rows {
        if p == m.cols {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in p..m.cols {
                if !m.a[i][j].is_zero() && best.is_none_or(|b| m.a[i][j].abs_lt(&m.a[i][b])) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            m.swap_cols(p, b);
            u.swap_cols(p, b);
            let mut done = true;
            for j in p + 1..m.cols {
                if !m.a[i][j].is_zero() {
                    let (q, rem) = m.a[i][j].div_rem(&m.a[i][p])?;
                    m.col_axpy(j, &q, p)?;
                    u.col_axpy(j, &q, p)?;
                    if !rem.is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                p += 1;
                break;
            }
        }
    }
    Some((m, u, p))
}

/// Coefficients `x` with `E[:, ..p] x = v` for an echelon basis, or `None`
/// in the inner option when `v` is outside the lattice.
pub fn solve_echelon<T: Int>(e: &Dense<T>, p: usize, v: &[T]) -> Option<Option<Vec<T>>> {
    let mut v = v.to_vec();
    let mut x = Vec::with_capacity(p);
    let mut row = 0;
    for j in 0..p {
        while e.a[row][j].is_zero() {
            if !v[row].is_zero() {
                return Some(None);
            }
            row += 1;
        }
        let (q, rem) = v[row].div_rem(&e.a[row][j])?;
        if !rem.is_zero() {
            return Some(None);
        }
        for (i, vi) in v.iter_mut().enumerate().skip(row) {
            if !e.a[i][j].is_zero() {
                *vi = vi.sub(&q.mul(&e.a[i][j])?)?;
            }
        }
        x.push(q);
        row += 1;
    }
    Some(v.iter().all(|t| t.is_zero()).then_some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> Dense<i64> {
        Dense { rows: rows.len(), cols: rows[0].len(), a: rows.iter().map(|r| r.to_vec()).collect() }
    }

    #[test]
    fn snf_small() {
        assert_eq!(invariant_factors(m(&[&[2]])).unwrap(), vec![2]);
        assert_eq!(invariant_factors(m(&[&[0, 0], &[0, 0]])).unwrap(), Vec::<i64>::new());
        assert_eq!(invariant_factors(m(&[&[2, 0], &[0, 3]])).unwrap(), vec![1, 6]);
        assert_eq!(invariant_factors(m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).unwrap(), vec![2, 6, 12]);
    }

    #[test]
    fn bigint_path_agrees() {
        let a = m(&[&[4, 6], &[6, 9], &[2, 8]]);
        let big = Dense {
            rows: 3,
            cols: 2,
            a: a.a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        };
        let small: Vec<BigInt> = invariant_factors(a).unwrap().into_iter().map(BigInt::from).collect();
        assert_eq!(invariant_factors(big).unwrap(), small);
    }

    #[test]
    fn echelon_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let (e, u, p) = column_echelon(a.clone()).unwrap();
        assert_eq!(p, 1);
        for k in p..3 {
            for row in &a.a {
                let s: i64 = (0..3).map(|j| row[j] * u.a[j][k]).sum();
                assert_eq!(s, 0);
            }
        }
        assert!(solve_echelon(&e, p, &[2, 4]).unwrap().is_some());
        assert!(solve_echelon(&e, p, &[1, 1]).unwrap().is_none());
    }
}
