//! Exact linear algebra over Q or F_p: the computational substrate for
//! everything else. All subspaces are kept in canonical reduced row
//! echelon form, so results are independent of input basis order.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{as_integer, parse_rational, scalar_abs, FieldSpec, Scalar};
pub use subspace::{
    image_basis, kernel_basis, membership_test, rank, solve_linear, sum_subspaces, Subspace,
};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    #[test]
    fn rref_dependent_rows() {
        // hand Gaussian elimination: [[2,4],[1,2]] -> [[1,2],[0,0]]
        let m = Matrix::from_i64(2, 2, &[2, 4, 1, 2], q());
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_i64(2, 2, &[1, 2, 0, 0], q()));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(3, q());
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_empty() {
        let m = Matrix::zero(0, 0, q());
        let (r, pivots) = m.rref();
        assert_eq!(r.rows(), 0);
        assert_eq!(r.cols(), 0);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_i64(3, 4, &[1, 2, 0, 3, 2, 4, 1, 1, 0, 0, 5, 5], q());
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_single_equation() {
        // kernel of [1 1] is span{(1,-1)}
        let m = Matrix::from_i64(1, 2, &[1, 1], q());
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vec(&[q().from_i64(1), q().from_i64(-1)]));
    }

    #[test]
    fn kernel_invertible() {
        let m = Matrix::from_i64(2, 2, &[1, 2, 3, 4], q());
        assert_eq!(kernel_basis(&m).dim(), 0);
    }

    #[test]
    fn kernel_zero_map() {
        let m = Matrix::zero(2, 3, q());
        assert_eq!(kernel_basis(&m).dim(), 3);
    }

    #[test]
    fn intersect_transverse_lines() {
        let a = Subspace::from_rows(2, vec![vec![q().from_i64(1), q().from_i64(0)]], q());
        let b = Subspace::from_rows(2, vec![vec![q().from_i64(1), q().from_i64(1)]], q());
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
    }

    #[test]
    fn intersect_idempotent() {
        let a = Subspace::from_rows(
            3,
            vec![
                vec![q().from_i64(1), q().from_i64(2), q().from_i64(3)],
                vec![q().from_i64(0), q().from_i64(1), q().from_i64(1)],
            ],
            q(),
        );
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn intersect_coordinate_planes() {
        // span{e1,e2} ∩ span{e2,e3} = span{e2} in K^3
        let e = |i: usize| {
            let mut v = vec![q().from_i64(0); 3];
            v[i] = q().from_i64(1);
            v
        };
        let a = Subspace::from_rows(3, vec![e(0), e(1)], q());
        let b = Subspace::from_rows(3, vec![e(1), e(2)], q());
        let c = a.intersect(&b).unwrap();
        assert_eq!(c, Subspace::from_rows(3, vec![e(1)], q()));
    }

    #[test]
    fn intersect_ambient_mismatch() {
        let a = Subspace::full(2, q());
        let b = Subspace::full(3, q());
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn complement_of_zero() {
        let w = Subspace::full(2, q());
        let u = Subspace::zero(2, q());
        assert_eq!(Subspace::complement_in(&u, &w).unwrap(), w);
    }

    #[test]
    fn complement_of_itself() {
        let w = Subspace::full(2, q());
        assert_eq!(Subspace::complement_in(&w, &w).unwrap().dim(), 0);
    }

    #[test]
    fn complement_greedy_first_vector() {
        // u = span{e1+e2} in K^2: the first full-space basis vector e1 completes it
        let u = Subspace::from_rows(2, vec![vec![q().from_i64(1), q().from_i64(1)]], q());
        let w = Subspace::full(2, q());
        let c = Subspace::complement_in(&u, &w).unwrap();
        assert_eq!(
            c,
            Subspace::from_rows(2, vec![vec![q().from_i64(1), q().from_i64(0)]], q())
        );
    }

    #[test]
    fn complement_not_contained() {
        let u = Subspace::from_rows(2, vec![vec![q().from_i64(1), q().from_i64(1)]], q());
        let w = Subspace::from_rows(2, vec![vec![q().from_i64(1), q().from_i64(0)]], q());
        assert!(Subspace::complement_in(&u, &w).is_err());
    }

    #[test]
    fn solve_and_membership() {
        let m = Matrix::from_i64(2, 2, &[1, 1, 0, 1], q());
        let b = vec![q().from_i64(3), q().from_i64(1)];
        let x = solve_linear(&m, &b).unwrap();
        assert_eq!(m.apply(&x), b);
        let s = image_basis(&m);
        assert!(membership_test(&s, &b));
    }

    #[test]
    fn fp_arithmetic_round_trip() {
        let f = FieldSpec::fp(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&(&a * &b) + &f.one(), f.from_i64(2)); // 15+1 = 16 = 2 mod 7
        assert!((&a * &a.inv()).is_one());
        assert!(FieldSpec::fp(6).is_err());
    }

    #[test]
    fn fp_rank_matches_q_on_unimodular() {
        let f = FieldSpec::fp(5).unwrap();
        let m = Matrix::from_i64(3, 3, &[1, 2, 0, 0, 1, 3, 0, 0, 1], f);
        assert_eq!(m.rank(), 3);
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in 0usize..5, cols in 0usize..5, seed in any::<u64>()) {
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 7) as i64 - 3
            };
            let data: Vec<i64> = (0..rows * cols).map(|_| next()).collect();
            let m = Matrix::from_i64(rows, cols, &data, FieldSpec::Q);
            prop_assert_eq!(m.rank() + kernel_basis(&m).dim(), cols);
        }

        #[test]
        fn modular_dimension_law(seed in any::<u64>()) {
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 5) as i64 - 2
            };
            let dim = 4usize;
            let mk = |rows: usize, next: &mut dyn FnMut() -> i64| {
                let data: Vec<Scalar> = (0..rows * dim).map(|_| FieldSpec::Q.from_i64(next())).collect();
                Subspace::from_matrix(&Matrix::new(rows, dim, data, FieldSpec::Q))
            };
            let a = mk(2, &mut next);
            let b = mk(2, &mut next);
            let inter = a.intersect(&b).unwrap();
            let sum = sum_subspaces(&a, &b);
            prop_assert_eq!(inter.dim() + sum.dim(), a.dim() + b.dim());
        }

        #[test]
        fn subspace_canonical_under_row_shuffle(seed in any::<u64>()) {
            let mut state = seed;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 5) as i64 - 2
            };
            let rows: Vec<Vec<Scalar>> = (0..3)
                .map(|_| (0..4).map(|_| FieldSpec::Q.from_i64(next())).collect())
                .collect();
            let mut shuffled = rows.clone();
            shuffled.reverse();
            let a = Subspace::from_rows(4, rows, FieldSpec::Q);
            let b = Subspace::from_rows(4, shuffled, FieldSpec::Q);
            prop_assert_eq!(a, b);
        }
    }
}
