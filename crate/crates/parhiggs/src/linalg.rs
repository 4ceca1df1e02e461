//! Exact dense linear solves and the inverse-Vandermonde recurrences used by
//! the interpolation steps of the reconstruction algorithms.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Solve `A x = b` by Gaussian elimination with full pivoting; exact on the
/// exact backends (any nonzero pivot is exact there; on floats the pivot of
/// largest magnitude is chosen).
pub fn linear_solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Scalar>> = a.to_vec();
    let mut rhs: Vec<Scalar> = b.to_vec();
    let mut col_of: Vec<usize> = (0..n).collect();

    for k in 0..n {
        // Full pivot search over the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        let mut best = 0.0f64;
        for i in k..n {
            for j in k..n {
                let e = &m[i][j];
                if e.is_zero() {
                    continue;
                }
                if e.is_exact() {
                    pivot = Some((i, j));
                    break;
                }
                let mag = e.to_complex().norm();
                if mag > best {
                    best = mag;
                    pivot = Some((i, j));
                }
            }
            if pivot.map(|(_, _)| m[pivot.unwrap().0][pivot.unwrap().1].is_exact()) == Some(true) {
                break;
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => {
                return Err(Error::SingularSystem {
                    rank_defect: n - k,
                    detail: "no nonzero pivot in remaining block".into(),
                })
            }
        };
        m.swap(k, pi);
        rhs.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            col_of.swap(k, pj);
        }
        let piv = m[k][k].clone();
        for i in (k + 1)..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].div_s(&piv)?;
            for j in k..n {
                let t = m[k][j].mul_s(&f);
                m[i][j] = m[i][j].sub_s(&t);
            }
            let t = rhs[k].mul_s(&f);
            rhs[i] = rhs[i].sub_s(&t);
        }
    }

    // Back substitution.
    let mut x = vec![Scalar::zero(); n];
    for k in (0..n).rev() {
        let mut acc = rhs[k].clone();
        for j in (k + 1)..n {
            acc = acc.sub_s(&m[k][j].mul_s(&x[j]));
        }
        x[k] = acc.div_s(&m[k][k])?;
    }
    // Undo column permutation.
    let mut out = vec![Scalar::zero(); n];
    for (k, &c) in col_of.iter().enumerate() {
        out[c] = x[k].clone();
    }
    Ok(out)
}

/// Coefficients `a_0..a_{m-1}` of the interpolating polynomial through
/// `(nodes[i], values[i])`, computed via the `l`/`u` recurrences for the
/// inverse of the Vandermonde matrix:
/// `l_{11}=1`, `l_{ij} = prod_{k<=i, k!=j} 1/(q_j - q_k)` for `i >= j`,
/// `u_{ii}=1`, `u_{i1}=0` (i>1), `u_{ij} = u_{i-1,j-1} - u_{i,j-1} q_{j-1}`.
pub fn vandermonde_inverse_apply(nodes: &[Scalar], values: &[Scalar]) -> Result<Vec<Scalar>> {
    let m = nodes.len();
    assert_eq!(values.len(), m);
    for i in 0..m {
        for j in (i + 1)..m {
            if nodes[i] == nodes[j] {
                return Err(Error::DuplicateNode(format!("{:?}", nodes[i])));
            }
        }
    }
    // l[i][j], u[i][j] with 0-based storage for 1-based indices.
    let mut l = vec![vec![Scalar::zero(); m]; m];
    for i in 0..m {
        for j in 0..=i {
            let mut prod = Scalar::one();
            for k in 0..=i {
                if k != j {
                    prod = prod.mul_s(&nodes[j].sub_s(&nodes[k]).inv_s()?);
                }
            }
            l[i][j] = prod;
        }
    }
    let mut u = vec![vec![Scalar::zero(); m]; m];
    for i in 0..m {
        u[i][i] = Scalar::one();
        for j in (i + 1)..m {
            let above = if i == 0 {
                Scalar::zero()
            } else {
                u[i - 1][j - 1].clone()
            };
            u[i][j] = above.sub_s(&u[i][j - 1].mul_s(&nodes[j - 1]));
        }
    }
    // a_i = sum_j sum_k u_{i+1,j} l_{jk} p_k  (1-based indices).
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let mut acc = Scalar::zero();
        for j in 0..m {
            if u[i][j].is_zero() {
                continue;
            }
            for k in 0..=j {
                acc = acc.add_s(&u[i][j].mul_s(&l[j][k]).mul_s(&values[k]));
            }
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    #[test]
    fn solve_hand_cases() {
        // identity
        let a = vec![vec![s(1), s(0)], vec![s(0), s(1)]];
        let b = vec![s(5), s(-3)];
        assert_eq!(linear_solve(&a, &b).unwrap(), b);
        // [[1,1],[1,-1]] x = (2,0) -> (1,1)
        let a = vec![vec![s(1), s(1)], vec![s(1), s(-1)]];
        let x = linear_solve(&a, &[s(2), s(0)]).unwrap();
        assert_eq!(x, vec![s(1), s(1)]);
        // singular
        let a = vec![vec![s(0), s(0)], vec![s(0), s(0)]];
        assert!(matches!(
            linear_solve(&a, &[s(1), s(1)]),
            Err(Error::SingularSystem { .. })
        ));
    }

    #[test]
    fn vandermonde_two_points() {
        // nodes (2,5), values (3,9) -> (a0,a1) = (-1,2)
        let a = vandermonde_inverse_apply(&[s(2), s(5)], &[s(3), s(9)]).unwrap();
        assert_eq!(a, vec![s(-1), s(2)]);
        // constant interpolation
        let a = vandermonde_inverse_apply(&[s(7)], &[s(11)]).unwrap();
        assert_eq!(a, vec![s(11)]);
        // duplicate node
        assert!(matches!(
            vandermonde_inverse_apply(&[s(1), s(1)], &[s(0), s(0)]),
            Err(Error::DuplicateNode(_))
        ));
    }

    #[test]
    fn vandermonde_matches_linear_solve_random() {
        // deterministic pseudo-random rational nodes/values, sizes up to 8
        let mut seed: i64 = 12345;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 19) - 9
        };
        for m in 1..=8 {
            // distinct nodes
            let mut nodes = Vec::new();
            while nodes.len() < m {
                let c = Scalar::rat(next(), 1 + (next().abs() % 5));
                if !nodes.contains(&c) {
                    nodes.push(c);
                }
            }
            let values: Vec<Scalar> = (0..m).map(|_| Scalar::rat(next(), 1 + (next().abs() % 7))).collect();
            let coeffs = vandermonde_inverse_apply(&nodes, &values).unwrap();
            // check interpolation property
            let p = Poly::from_coeffs(coeffs.clone());
            for (n, v) in nodes.iter().zip(values.iter()) {
                assert_eq!(&p.eval(n), v);
            }
            // check against the explicit Vandermonde solve
            let a: Vec<Vec<Scalar>> = nodes
                .iter()
                .map(|q| (0..m).map(|e| q.pow_u(e as u32)).collect())
                .collect();
            let x = linear_solve(&a, &values).unwrap();
            assert_eq!(x, coeffs);
        }
    }

    #[test]
    fn solve_over_h_field() {
        let h = Scalar::h();
        // [[1, h],[0, h]] x = (1+h, h) -> x = (1, 1)
        let a = vec![vec![s(1), h.clone()], vec![s(0), h.clone()]];
        let b = vec![s(1).add_s(&h), h.clone()];
        let x = linear_solve(&a, &b).unwrap();
        assert_eq!(x, vec![s(1), s(1)]);
    }
}
