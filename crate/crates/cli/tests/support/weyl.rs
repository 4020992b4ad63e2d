//! Weyl dimension formula for finite types, computed straight from a Cartan
//! matrix `A_ij = <h_i, alpha_j>`.

use std::collections::BTreeSet;

/// Positive roots as coefficient vectors in the simple roots, by height.
pub fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    while !layer.is_empty() {
        roots.extend(layer.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    roots.into_iter().collect()
}

/// Positive `d` with `d_i A_ij = d_j A_ji`, for a connected finite-type matrix.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    // rational d_i = num_i / den_i, fixed d_0 = 1
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if a[i][j] == 0 || d[j].is_some() {
                    continue;
                }
                if let Some((p, q)) = d[i] {
                    d[j] = Some((p * a[i][j], q * a[j][i]));
                    changed = true;
                }
            }
        }
    }
    let d: Vec<(i64, i64)> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d.iter().fold(1, |acc, &(_, q)| acc / gcd(acc, q.abs()) * q.abs());
    let scaled: Vec<i64> = d.iter().map(|&(p, q)| p * (lcm / q)).collect();
    let g = scaled.iter().fold(0, |acc, &x| gcd(acc, x.abs()));
    scaled.into_iter().map(|x| x.abs() / g).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `prod_{alpha > 0} (lambda + rho | alpha) / (rho | alpha)`, with `lambda`
/// given by its fundamental-weight coefficients.
pub fn weyl_dimension(a: &[Vec<i64>], lambda: &[i64]) -> u128 {
    let d = symmetrizer(a);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for alpha in positive_roots(a) {
        // (Lambda_i | alpha_j) = delta_ij d_j
        let top: i64 = (0..a.len()).map(|j| alpha[j] * d[j] * (lambda[j] + 1)).sum();
        let bottom: i64 = (0..a.len()).map(|j| alpha[j] * d[j]).sum();
        num *= top as u128;
        den *= bottom as u128;
        let g = gcd_u(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1, "dimension is not an integer");
    num
}

fn gcd_u(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u(b, a % b)
    }
}
