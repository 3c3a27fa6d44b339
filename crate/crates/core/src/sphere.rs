//! Construction of the polynomials `phi_t` (vanishing exactly on vectors
//! of Hamming weight below `t`) and `rho_t` (indicator of the weight-`t`
//! shell) in the sigma basis, plus the run-length table of their
//! coefficient windows and expansion of arbitrary symmetric functions in
//! the `{rho_t}` basis.
//!
//! The coefficients of `phi_t` are eventually periodic with a power-of-two
//! period `tau`, so a window of `tau` bits determines the whole
//! polynomial. Odd `t` is filled by a coefficient recurrence driven by
//! binomial parities; even `t = r * 2^e` reuses the window of the odd part
//! `r` stretched by `2^e`.

use crate::error::{Error, Result};
use crate::symfunc::{binom_parity, SymmetricPoly};

/// Hard cap on thresholds; keeps every window degree well inside `u64`.
pub const MAX_T: u64 = 1 << 32;

fn check_cap(t: u64) -> Result<()> {
    if t > MAX_T {
        Err(Error::ThresholdCap(t))
    } else {
        Ok(())
    }
}

/// Window of `phi_t` for odd `t >= 1`: coefficients over degrees
/// `t..=tau` with `tau = 2^ceil(log2 t)`, computed by the recurrence
/// `a_i = 1 + sum_{j=t}^{i-1} a_j * C(i, j)  (mod 2)`.
fn odd_window(t: u64) -> (u64, Vec<bool>) {
    debug_assert!(t >= 1 && t % 2 == 1);
    let tau = t.next_power_of_two();
    let mut window = vec![false; tau as usize];
    window[(t - 1) as usize] = true;
    for i in (t + 1)..=tau {
        let mut acc = true;
        for j in t..i {
            if window[(j - 1) as usize] && binom_parity(i, j) {
                acc = !acc;
            }
        }
        window[(i - 1) as usize] = acc;
    }
    (tau, window)
}

/// Builds `phi_t`, the polynomial that is 0 on weights below `t` and 1 on
/// weights at least `t`, in periodic form.
///
/// `phi_0` is the constant 1. Odd thresholds run the window recurrence;
/// even thresholds `t = r * 2^e` (r odd) stretch the window of `phi_r` by
/// `2^e`, with period `2^e * tau_r`.
pub fn build_phi(t: u64) -> Result<SymmetricPoly> {
    check_cap(t)?;
    if t == 0 {
        return Ok(SymmetricPoly::periodic(true, 1, vec![false]));
    }
    let e = t.trailing_zeros();
    let r = t >> e;
    let (tau_r, win_r) = odd_window(r);
    if e == 0 {
        return Ok(SymmetricPoly::periodic(false, tau_r, win_r));
    }
    let tau = tau_r << e;
    let mut window = vec![false; tau as usize];
    for i in r..=tau_r {
        if win_r[(i - 1) as usize] {
            window[((i << e) - 1) as usize] = true;
        }
    }
    Ok(SymmetricPoly::periodic(false, tau, window))
}

/// Closed-form fast path for `phi_t`, bypassing the recurrence.
///
/// Applies when `t` is `2^s`, `2^s - 1` or `2^{s-1} + 1`; returns `None`
/// for every other threshold.
pub fn build_phi_closed(t: u64) -> Option<SymmetricPoly> {
    if t == 0 || t > MAX_T {
        return None;
    }
    if t.is_power_of_two() {
        // phi_{2^s} = sigma_{2^s} + sigma_{2*2^s} + ...
        let mut window = vec![false; t as usize];
        window[(t - 1) as usize] = true;
        return Some(SymmetricPoly::periodic(false, t, window));
    }
    let tau = t.next_power_of_two();
    if t == tau - 1 {
        // phi_{2^s - 1}: window {2^s - 1, 2^s}.
        let mut window = vec![false; tau as usize];
        window[(t - 1) as usize] = true;
        window[(tau - 1) as usize] = true;
        return Some(SymmetricPoly::periodic(false, tau, window));
    }
    if t == tau / 2 + 1 {
        // phi_{2^{s-1} + 1}: full window {t..2^s}.
        let window = (1..=tau).map(|i| i >= t).collect();
        return Some(SymmetricPoly::periodic(false, tau, window));
    }
    None
}

/// Builds `rho_t = phi_t + phi_{t+1}`, the indicator of the weight-`t`
/// shell, in periodic form.
///
/// The period is the larger of the two phi periods; `rho_0 = 1 + phi_1`.
pub fn build_rho(t: u64) -> Result<SymmetricPoly> {
    check_cap(t)?;
    let lo = build_phi(t)?;
    let hi = build_phi(t + 1)?;
    let tau = lo.period().unwrap().max(hi.period().unwrap());
    let window = (1..=tau).map(|i| lo.coeff(i) ^ hi.coeff(i)).collect();
    Ok(SymmetricPoly::periodic(
        lo.constant_bit() ^ hi.constant_bit(),
        tau,
        window,
    ))
}

/// The two parts `psi = phi_{2^s} + 1` (periodic) and `eta` (the finite
/// window polynomial over `[t, 2^s]`) of `phi_t`.
///
/// They recompose through the complement product
/// `1 + phi_t = psi * (1 + eta)` in every restriction. The direct
/// product is `psi * eta = phi_t + phi_{2^s}`: the window term
/// `sigma_{2^s}` absorbs the comb (`sigma_{2^s} * phi_{2^s} =
/// sigma_{2^s}`), so multiplying the parts alone recovers `phi_t` only
/// up to that comb.
pub fn phi_factor_parts(t: u64) -> Result<(SymmetricPoly, SymmetricPoly)> {
    check_cap(t)?;
    assert!(t >= 1, "factorization needs t >= 1");
    let phi = build_phi(t)?;
    let tau = phi.period().unwrap();
    let psi = {
        let pow = build_phi(tau)?;
        let window = (1..=tau).map(|i| pow.coeff(i)).collect();
        SymmetricPoly::periodic(true, tau, window)
    };
    let eta = phi.restrict(tau);
    Ok((psi, eta))
}

/// Reconstructs the symmetric function with the given weight profile as a
/// finite sigma-basis polynomial over `n = values.len() - 1` variables.
///
/// `values[w]` is the desired evaluation on any point of weight `w`; the
/// result is the XOR of `restrict(rho_w, n)` over the set weights.
pub fn expand_in_rho_basis(values: &[bool]) -> Result<SymmetricPoly> {
    assert!(!values.is_empty());
    let n = (values.len() - 1) as u64;
    let mut acc = SymmetricPoly::zero();
    for (w, &bit) in values.iter().enumerate() {
        if bit {
            acc = acc.xor(&build_rho(w as u64)?.restrict(n))?;
        }
    }
    Ok(acc)
}

/// One row of the coefficient-window table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub t: u64,
    pub phi_tau: u64,
    /// Degrees in `[t, phi_tau]` carrying a phi coefficient.
    pub phi_indices: Vec<u64>,
    pub rho_tau: u64,
    /// Degrees in `[t, rho_tau]` carrying a rho coefficient.
    pub rho_indices: Vec<u64>,
}

/// Emits the windows of `phi_t` and `rho_t` for `t = 1..=max_t`.
pub fn emit_table(max_t: u64) -> Result<Vec<TableRow>> {
    assert!(max_t >= 1);
    let mut rows = Vec::with_capacity(max_t as usize);
    for t in 1..=max_t {
        let phi = build_phi(t)?;
        let rho = build_rho(t)?;
        let phi_tau = phi.period().unwrap();
        let rho_tau = rho.period().unwrap();
        rows.push(TableRow {
            t,
            phi_tau,
            phi_indices: (t..=phi_tau).filter(|&i| phi.coeff(i)).collect(),
            rho_tau,
            rho_indices: (t..=rho_tau).filter(|&i| rho.coeff(i)).collect(),
        });
    }
    Ok(rows)
}

/// Renders an ascending index list with runs of three or more
/// consecutive integers collapsed to `a..b`.
pub fn render_runs(indices: &[u64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut k = 0;
    while k < indices.len() {
        let start = indices[k];
        let mut end = start;
        while k + 1 < indices.len() && indices[k + 1] == end + 1 {
            k += 1;
            end = indices[k];
        }
        if end - start >= 2 {
            parts.push(format!("{start}..{end}"));
        } else {
            for v in start..=end {
                parts.push(v.to_string());
            }
        }
        k += 1;
    }
    parts.join(",")
}

/// Fixed-width text rendering of the table, one row per threshold.
pub fn render_table(rows: &[TableRow]) -> String {
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.t.to_string(),
                r.phi_tau.to_string(),
                render_runs(&r.phi_indices),
                r.rho_tau.to_string(),
                render_runs(&r.rho_indices),
            ]
        })
        .collect();
    let header = ["t", "tau", "phi", "tau", "rho"];
    let mut widths = [0usize; 5];
    for c in 0..5 {
        widths[c] = header[c].len();
        for row in &cells {
            widths[c] = widths[c].max(row[c].len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, row: [&str; 5]| {
        for c in 0..5 {
            if c > 0 {
                out.push_str("  ");
            }
            if c == 2 || c == 4 {
                out.push_str(&format!("{:<w$}", row[c], w = widths[c]));
            } else {
                out.push_str(&format!("{:>w$}", row[c], w = widths[c]));
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    emit(&mut out, header);
    for row in &cells {
        emit(&mut out, [&row[0], &row[1], &row[2], &row[3], &row[4]]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn indices(p: &SymmetricPoly, lo: u64, hi: u64) -> Vec<u64> {
        (lo..=hi).filter(|&i| p.coeff(i)).collect()
    }

    #[test]
    fn phi_small_thresholds() {
        let phi0 = build_phi(0).unwrap();
        assert!(phi0.constant_bit());
        assert!(phi0.eval_at_weight(0));
        assert!(phi0.eval_at_weight(5));

        let phi1 = build_phi(1).unwrap();
        assert_eq!(phi1.period(), Some(1));
        assert!(phi1.coeff(1) && phi1.coeff(2) && phi1.coeff(17));

        let phi2 = build_phi(2).unwrap();
        assert_eq!(phi2.period(), Some(2));
        assert_eq!(indices(&phi2, 1, 2), vec![2]);
    }

    #[test]
    fn phi_window_examples() {
        let phi5 = build_phi(5).unwrap();
        assert_eq!(phi5.period(), Some(8));
        assert_eq!(indices(&phi5, 5, 8), vec![5, 6, 7, 8]);

        let phi10 = build_phi(10).unwrap();
        assert_eq!(phi10.period(), Some(16));
        assert_eq!(indices(&phi10, 10, 16), vec![10, 12, 14, 16]);

        let phi16 = build_phi(16).unwrap();
        assert_eq!(phi16.period(), Some(16));
        assert_eq!(indices(&phi16, 16, 16), vec![16]);

        let phi63 = build_phi(63).unwrap();
        assert_eq!(phi63.period(), Some(64));
        assert_eq!(indices(&phi63, 63, 64), vec![63, 64]);
    }

    #[test]
    fn phi_window_lemma_endpoints() {
        // a_t = 1 and a_{2^s} = 1 in every built window; powers of two
        // reduce to the single index 2^s.
        for t in 1..=64u64 {
            let phi = build_phi(t).unwrap();
            let tau = phi.period().unwrap();
            assert!(phi.coeff(t), "a_t for t={t}");
            assert!(phi.coeff(tau), "a_tau for t={t}");
            for i in 1..t {
                assert!(!phi.coeff(i), "a_{i} below t={t}");
            }
            if t.is_power_of_two() {
                assert_eq!(indices(&phi, 1, tau), vec![t]);
            }
        }
    }

    #[test]
    fn phi_indicator_property() {
        for t in 0..=64u64 {
            let phi = build_phi(t).unwrap();
            let tau = phi.period().unwrap_or(1);
            for w in 0..=2 * tau {
                assert_eq!(phi.eval_at_weight(w), w >= t, "t={t} w={w}");
            }
        }
    }

    #[test]
    fn rho_shell_property() {
        for t in 0..=64u64 {
            let rho = build_rho(t).unwrap();
            let tau = rho.period().unwrap();
            for w in 0..=2 * tau {
                assert_eq!(rho.eval_at_weight(w), w == t, "t={t} w={w}");
            }
        }
    }

    #[test]
    fn rho_window_examples() {
        let rho3 = build_rho(3).unwrap();
        assert_eq!(rho3.period(), Some(4));
        assert_eq!(indices(&rho3, 3, 4), vec![3]);

        let rho8 = build_rho(8).unwrap();
        assert_eq!(rho8.period(), Some(16));
        assert_eq!(indices(&rho8, 8, 16), (8..=15).collect::<Vec<_>>());

        let rho7 = build_rho(7).unwrap();
        assert_eq!(rho7.period(), Some(8));
        assert_eq!(indices(&rho7, 7, 8), vec![7]);
    }

    #[test]
    fn closed_forms() {
        for t in [8u64, 7, 9, 16, 31, 17, 1, 2, 4, 3, 5] {
            let closed = build_phi_closed(t).expect("closed form applies");
            assert_eq!(closed, build_phi(t).unwrap(), "t={t}");
        }
        assert_eq!(build_phi_closed(6), None);
        assert_eq!(build_phi_closed(10), None);
        assert_eq!(build_phi_closed(0), None);
    }

    #[test]
    fn even_case_is_stretched_odd_case() {
        for t in (2..=64u64).filter(|t| t % 2 == 0) {
            let e = t.trailing_zeros();
            let r = t >> e;
            let phi_t = build_phi(t).unwrap();
            let phi_r = build_phi(r).unwrap();
            let tau = phi_t.period().unwrap();
            for i in 1..=tau {
                let expect = i % (1 << e) == 0 && phi_r.coeff(i >> e);
                assert_eq!(phi_t.coeff(i), expect, "t={t} i={i}");
            }
        }
    }

    #[test]
    fn phi_absorbs_under_product() {
        for t1 in 1..=16u64 {
            for t2 in 1..=16u64 {
                let n = 12;
                // The product can raise degrees above n; re-restrict.
                let lhs = build_phi(t1)
                    .unwrap()
                    .restrict(n)
                    .mul(&build_phi(t2).unwrap().restrict(n))
                    .unwrap()
                    .restrict(n);
                let rhs = build_phi(t1.max(t2)).unwrap().restrict(n);
                assert_eq!(lhs, rhs, "t1={t1} t2={t2}");
            }
        }
    }

    #[test]
    fn factorization_recomposes() {
        for t in 1..=24u64 {
            let (psi, eta) = phi_factor_parts(t).unwrap();
            let tau = psi.period().unwrap();
            for n in [6u64, 12, 20] {
                // Complement identity: 1 + phi_t = psi * (1 + eta).
                let eta_c = eta.restrict(n).xor(&SymmetricPoly::one()).unwrap();
                let product = psi.restrict(n).mul(&eta_c).unwrap().restrict(n);
                let phi_c = build_phi(t)
                    .unwrap()
                    .restrict(n)
                    .xor(&SymmetricPoly::one())
                    .unwrap();
                assert_eq!(product, phi_c, "t={t} n={n}");

                // Direct product: psi * eta = phi_t + phi_{2^s}.
                let direct = psi.restrict(n).mul(&eta.restrict(n)).unwrap().restrict(n);
                let expect = build_phi(t)
                    .unwrap()
                    .restrict(n)
                    .xor(&build_phi(tau).unwrap().restrict(n))
                    .unwrap();
                assert_eq!(direct, expect, "t={t} n={n}");
            }
        }
        let (psi8, eta8) = phi_factor_parts(8).unwrap();
        assert!(psi8.constant_bit());
        assert_eq!(eta8, SymmetricPoly::sigma(8));
        let (_, eta7) = phi_factor_parts(7).unwrap();
        assert_eq!(eta7, SymmetricPoly::from_degrees(false, [7, 8]));
    }

    #[test]
    fn rho_basis_expansion() {
        // Indicator of weights >= 3 equals restrict(phi_3, 6).
        let profile: Vec<bool> = (0..=6).map(|w| w >= 3).collect();
        assert_eq!(
            expand_in_rho_basis(&profile).unwrap(),
            build_phi(3).unwrap().restrict(6)
        );

        // All-ones profile is the constant 1.
        assert_eq!(
            expand_in_rho_basis(&vec![true; 5]).unwrap(),
            SymmetricPoly::one()
        );

        // Alternating profile on n = 4.
        let profile = [false, true, false, true, false];
        let f = expand_in_rho_basis(&profile).unwrap();
        for (w, &want) in profile.iter().enumerate() {
            assert_eq!(f.eval_at_weight(w as u64), want, "w={w}");
        }
    }

    #[test]
    fn table_rows() {
        let rows = emit_table(34).unwrap();
        assert_eq!(rows[0].t, 1);
        assert_eq!(rows[0].phi_tau, 1);
        assert_eq!(rows[0].phi_indices, vec![1]);
        assert_eq!(rows[0].rho_tau, 2);
        assert_eq!(rows[0].rho_indices, vec![1]);

        let row34 = &rows[33];
        assert_eq!(row34.phi_tau, 64);
        assert_eq!(
            row34.phi_indices,
            (34..=64).filter(|i| i % 2 == 0).collect::<Vec<_>>()
        );
    }

    #[test]
    fn run_length_rendering() {
        assert_eq!(render_runs(&[5, 6, 7, 8]), "5..8");
        assert_eq!(render_runs(&[3, 4]), "3,4");
        assert_eq!(render_runs(&[10, 12, 14, 16]), "10,12,14,16");
        assert_eq!(
            render_runs(&[21, 22, 23, 24, 29, 30, 31, 32]),
            "21..24,29..32"
        );
        assert_eq!(render_runs(&[]), "");
    }

    #[test]
    fn threshold_cap() {
        assert!(build_phi(MAX_T + 1).is_err());
        assert!(build_rho(MAX_T + 1).is_err());
    }
}
