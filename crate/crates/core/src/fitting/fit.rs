use rayon::prelude::*;

use crate::algebra::{nrd, CentralElement, GroupAlgebraElement, GroupAlgebraMatrix};
use crate::arith::{subsets, Rational};
use crate::error::{arg, Result};

use super::lattice::CentralLattice;
use super::xi::{xi_approx, Budget};

/// Replacement columns in A^c: the standard basis, plus b_i + g·b_j
/// (i ≠ j) for non-abelian groups when the budget allows.
fn replacement_pool(m: &GroupAlgebraMatrix<Rational>, c: usize, budget: &Budget) -> Vec<Vec<GroupAlgebraElement<Rational>>> {
    let g = m.group();
    let e = |i: usize| {
        let mut v = vec![GroupAlgebraElement::zero(g); c];
        v[i] = GroupAlgebraElement::one(g);
        v
    };
    let mut pool: Vec<_> = (0..c).map(e).collect();
    if !g.is_abelian() && budget.pool_combinations {
        for i in 0..c {
            for j in 0..c {
                if i == j {
                    continue;
                }
                for h in 0..g.order() {
                    let mut v = e(i);
                    v[j] = GroupAlgebraElement::basis(g, h);
                    pool.push(v);
                }
            }
        }
    }
    pool
}

/// Budgeted a-th Fitting invariant of the presentation A^rows → A^cols,
/// v ↦ v·M.
///
/// Generated by ξ times the reduced norms of all cols×cols minors with at
/// most `a` columns replaced by pool vectors. Exact for abelian groups,
/// for a = 0, and for a ≥ cols (whenever ξ itself is exact).
pub fn fit_matrix(m: &GroupAlgebraMatrix<Rational>, a: usize, budget: &Budget) -> Result<CentralLattice> {
    let (r, c) = (m.rows(), m.cols());
    if r < c {
        return arg(format!("Fitting invariant needs rows ≥ cols, got {r}x{c}"));
    }
    if !m.is_integral() {
        return arg("Fitting invariants are defined for integral matrices");
    }
    let g = m.group();
    let pool = replacement_pool(m, c, budget);
    let mut candidates = Vec::new();
    for rows in subsets(r, c) {
        let sub = m.select_rows(&rows);
        for t in 0..=a.min(c) {
            for cols in subsets(c, t) {
                for picks in subsets(pool.len(), t) {
                    let mut n = sub.clone();
                    for (&col, &p) in cols.iter().zip(&picks) {
                        for (i, x) in pool[p].iter().enumerate() {
                            n.set(i, col, x.clone());
                        }
                    }
                    candidates.push(n);
                }
            }
        }
    }
    let norms = candidates
        .par_iter()
        .map(nrd)
        .collect::<Result<Vec<CentralElement>>>()?;
    let minors = CentralLattice::from_generators(g, &norms)?;
    let xi = xi_approx(g, budget)?;
    let mut out = xi.mul(&minors)?;
    let exact = xi.is_exact() && (g.is_abelian() || a == 0 || a >= c);
    out.note(format!(
        "{} minors with ≤{a} replaced columns from a pool of {} vectors",
        candidates.len(),
        pool.len()
    ));
    if !exact {
        out.note("non-abelian replacement pool: under-approximation");
    }
    out.set_flags(xi.is_stable(), exact);
    Ok(out)
}

/// Fitting invariant of the transposed presentation: fit_matrix of
/// ι_#(M^tr). Square matrices only.
pub fn fit_transpose(m: &GroupAlgebraMatrix<Rational>, a: usize, budget: &Budget) -> Result<CentralLattice> {
    if !m.is_square() {
        return arg("transpose invariants are defined for square matrices");
    }
    fit_matrix(&m.hash_transpose(), a, budget)
}

fn leibniz_det(m: &[Vec<GroupAlgebraElement<Rational>>], one: &GroupAlgebraElement<Rational>) -> GroupAlgebraElement<Rational> {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    // Laplace expansion along the first row; entries commute.
    let mut acc = one - one;
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<_>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &leibniz_det(&minor, one);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Classical a-th Fitting ideal over a commutative group ring: the ideal
/// of (cols−a)-minors, computed directly in Z[G].
pub fn fit_classical_oracle(m: &GroupAlgebraMatrix<Rational>, a: usize) -> Result<CentralLattice> {
    let g = m.group();
    if !g.is_abelian() {
        return arg(format!("classical Fitting ideals need an abelian group, got {}", g.name()));
    }
    if !m.is_integral() {
        return arg("Fitting ideals are defined for integral matrices");
    }
    let (r, c) = (m.rows(), m.cols());
    let one = GroupAlgebraElement::one(g);
    let k = c.saturating_sub(a);
    let mut minors = Vec::new();
    for rows in subsets(r, k) {
        for cols in subsets(c, k) {
            let sub: Vec<Vec<_>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                .collect();
            minors.push(leibniz_det(&sub, &one));
        }
    }
    // for abelian G each class is one element, so coordinates are coefficients
    let mut out = CentralLattice::zero(g);
    for x in &minors {
        for h in 0..g.order() {
            out.insert_coords(x.translate(h).coeffs())?;
        }
    }
    out.note(format!("classical ideal of {} minors of size {k}", minors.len()));
    out.set_flags(true, true);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group;

    #[test]
    fn diagonal_over_trivial_group() {
        let c1 = group("C1").unwrap();
        let m = GroupAlgebraMatrix::from_i64(&c1, 2, 2, &[vec![2], vec![0], vec![0], vec![3]]).unwrap();
        let b = Budget::default();
        let six = CentralLattice::from_generators(&c1, &[CentralElement::constant(&c1, &Rational::from(6))]).unwrap();
        let unit = CentralLattice::center_of_group_ring(&c1);
        assert_eq!(fit_matrix(&m, 0, &b).unwrap(), six);
        assert_eq!(fit_matrix(&m, 1, &b).unwrap(), unit);
        assert_eq!(fit_classical_oracle(&m, 0).unwrap(), six);
        assert_eq!(fit_classical_oracle(&m, 1).unwrap(), unit);
        assert_eq!(fit_classical_oracle(&m, 5).unwrap(), unit);
    }

    #[test]
    fn square_a0_is_principal() {
        let s3 = group("S3").unwrap();
        let b = Budget::default();
        let m = GroupAlgebraMatrix::from_i64(&s3, 1, 1, &[vec![2, 1, 0, 0, 1, 0]]).unwrap();
        let f = fit_matrix(&m, 0, &b).unwrap();
        let xi = xi_approx(&s3, &b).unwrap();
        let n = CentralLattice::from_generators(&s3, &[nrd(&m).unwrap()]).unwrap();
        assert_eq!(f, xi.mul(&n).unwrap());
        assert!(f.is_sublattice_of(&fit_matrix(&m, 1, &b).unwrap()));
        assert_eq!(fit_matrix(&m, 1, &b).unwrap(), xi);
    }

    #[test]
    fn classical_matches_on_c3() {
        let c3 = group("C3").unwrap();
        let b = Budget::default();
        let m = GroupAlgebraMatrix::from_i64(
            &c3,
            3,
            2,
            &[vec![1, 1, 0], vec![2, 0, 0], vec![0, 0, 3], vec![1, -1, 0], vec![0, 2, 1], vec![1, 0, 0]],
        )
        .unwrap();
        for a in 0..3 {
            assert_eq!(fit_matrix(&m, a, &b).unwrap(), fit_classical_oracle(&m, a).unwrap(), "a={a}");
        }
    }

    #[test]
    fn argument_errors() {
        let s3 = group("S3").unwrap();
        let m = GroupAlgebraMatrix::<Rational>::identity(&s3, 1);
        assert!(fit_classical_oracle(&m, 0).is_err());
        let wide = GroupAlgebraMatrix::<Rational>::zeros(&s3, 1, 2);
        assert!(fit_matrix(&wide, 0, &Budget::default()).is_err());
    }
}
