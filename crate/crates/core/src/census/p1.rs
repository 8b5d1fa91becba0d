//! Representatives of the projective line over Z/p^beta.

/// Rows `(u1, u2)` running over P^1(Z/p^beta), each completed to a
/// determinant-one integer matrix: `(1, t)` for `t mod p^beta` and
/// `(p s, 1)` for `s mod p^(beta-1)`.
pub fn enumerate_p1_reps(p: u64, beta: u32) -> Vec<[[i64; 2]; 2]> {
    if beta == 0 {
        return vec![[[1, 0], [0, 1]]];
    }
    let q = p.pow(beta) as i64;
    let mut out: Vec<[[i64; 2]; 2]> = (0..q).map(|t| [[1, t], [0, 1]]).collect();
    let p = p as i64;
    for s in 0..q / p {
        out.push([[p * s, 1], [-1, 0]]);
    }
    out
}

/// `p^beta + p^(beta-1)` for `beta >= 1`, else 1.
pub fn p1_count(p: u64, beta: u32) -> u64 {
    if beta == 0 { 1 } else { p.pow(beta) + p.pow(beta - 1) }
}
