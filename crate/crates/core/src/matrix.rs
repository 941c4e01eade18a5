//! Dense matrices over F_q as row vectors.

use crate::gf::{Field, Gf};

pub type Row = Vec<Gf>;

/// Reduces `rows` to reduced row-echelon form in place, drops zero rows and
/// returns the pivot columns.
pub fn rref(field: &Field, rows: &mut Vec<Row>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(field: &Field, rows: &[Row]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of {x : rows . x = 0}, one vector per free column.
pub fn nullspace(field: &Field, rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Gf::ZERO; ncols];
            v[fc] = Gf::ONE;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = field.neg(row[fc]);
            }
            v
        })
        .collect()
}

pub fn dot(field: &Field, a: &[Gf], b: &[Gf]) -> Gf {
    a.iter().zip(b).fold(Gf::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

pub fn transpose(rows: &[Row]) -> Vec<Row> {
    let ncols = rows.first().map_or(0, |r| r.len());
    (0..ncols).map(|c| rows.iter().map(|r| r[c]).collect()).collect()
}

pub fn mul(field: &Field, a: &[Row], b: &[Row]) -> Vec<Row> {
    let bt = transpose(b);
    a.iter().map(|ra| bt.iter().map(|cb| dot(field, ra, cb)).collect()).collect()
}

/// `A A^T`
pub fn gram(field: &Field, a: &[Row]) -> Vec<Row> {
    a.iter().map(|x| a.iter().map(|y| dot(field, x, y)).collect()).collect()
}

/// `v A` for a row vector v.
pub fn vec_mul(field: &Field, v: &[Gf], a: &[Row]) -> Row {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut out = vec![Gf::ZERO; ncols];
    for (&c, row) in v.iter().zip(a) {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(c, x));
        }
    }
    out
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(field: &Field, a: &[Row]) -> Option<Vec<Row>> {
    let n = a.len();
    let mut aug: Vec<Row> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Gf::ONE } else { Gf::ZERO }));
            row
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
