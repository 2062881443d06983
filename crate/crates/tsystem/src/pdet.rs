//! The two explicitly known coefficients of the linear differential
//! equation satisfied by `Delta(x) T_n^(k)`.

use ev_core::{parse_mpoly, MPolyX, PolyZeta};

/// The coefficients `a(x, z)` and `d(z)/m` of the differential equation for
/// `Delta(x) T_n^(k)`.
pub fn pdet_ad() -> (MPolyX, PolyZeta) {
    let a = parse_mpoly(
        "(x1 - 2*z - 1)*(x1 - 1)*((z + 2)*x1 - z)*((z + 2)*x1 - z*(2*z + 1))",
        Some(1),
    )
    .expect("a parses");
    let d = parse_mpoly("2*z*(z - 1)*(z + 1)*(z + 2)*(2*z + 1)", Some(0))
        .expect("d parses")
        .as_constant()
        .and_then(|c| c.to_polyzeta())
        .expect("d is a polynomial");
    (a, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::xi;
    use ev_core::RatZeta;

    #[test]
    fn roots_of_a() {
        let (a, d) = pdet_ad();
        for (j, x) in xi().iter().enumerate() {
            assert!(a.eval(std::slice::from_ref(x)).is_zero(), "xi_{j}");
        }
        assert!(!a.eval(&[RatZeta::from_int(0)]).is_zero());
        assert_eq!(d.degree(), Some(5));
    }
}
