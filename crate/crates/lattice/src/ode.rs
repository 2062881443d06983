//! The quadratic fourth-order equation satisfied by `f_n`.

use ev_core::{parse_ratzeta, PolyZeta, RatZeta};
use ev_tsystem::families::f_poly;
use ev_tsystem::Limits;

use crate::LatticeError;

fn p(s: &str) -> RatZeta {
    parse_ratzeta(s).expect("coefficient text")
}

/// The left-hand side of the `f_n` equation evaluated on `f_n`; zero when
/// the equation holds.
pub fn fn_ode_check(n: i64, limits: &Limits) -> Result<PolyZeta, LatticeError> {
    let f = RatZeta::from_polyzeta(&f_poly(n, limits)?);
    Ok(residual(&f, n))
}

/// The same expression for an arbitrary function `f` of `z`.
pub fn residual(f: &RatZeta, n: i64) -> PolyZeta {
    let d: Vec<RatZeta> = std::iter::successors(Some(f.clone()), |g| Some(g.derivative()))
        .take(5)
        .collect();
    let n2 = n * n;
    let c1 = p("z*(z - 1)^3*(z - 9)^3");
    let c2 = p("(7*z - 3)*(z - 1)^2*(z - 9)^3");
    let c3 = p(&format!(
        "-2*(z - 1)*(z - 9)*((z + 1)*(z - 9)^2*({n2}) + 2*(z - 9)^2*({n}) \
         - 5*z^3 + 105*z^2 - 483*z + 351)"
    ));
    let c4 = p(&format!(
        "2*(z - 1)*(z - 9)*((z + 1)*(z - 9)^2*({n2}) + 2*(z - 9)^2*({n}) \
         - z^3 + 9*z^2 - 111*z + 135)"
    ));
    let c5 = p(&format!(
        "-(2*(z - 9)*(z^3 - 39*z^2 + 139*z + 27)*({n2}) + 8*(z - 9)*(3*z^2 + 2*z + 27)*({n}) \
         - 2*z^4 + 72*z^3 - 876*z^2 + 2184*z - 1890)"
    ));
    let c6 = p(&format!(
        "-2*({n})*({n} - 1)*((5*z - 21)*(z - 9)*({n2}) - (z + 15)*(z - 9)*({n}) + z^2 + 22*z + 9)"
    ));
    let four = RatZeta::from_int(4);
    let three = RatZeta::from_int(3);
    let t1 = d[4]
        .mul(&d[0])
        .sub(&four.mul(&d[3]).mul(&d[1]))
        .add(&three.mul(&d[2]).mul(&d[2]));
    let t2 = d[3].mul(&d[0]).sub(&d[2].mul(&d[1]));
    let r = c1
        .mul(&t1)
        .add(&c2.mul(&t2))
        .add(&c3.mul(&d[2]).mul(&d[0]))
        .add(&c4.mul(&d[1]).mul(&d[1]))
        .add(&c5.mul(&d[1]).mul(&d[0]))
        .add(&c6.mul(&d[0]).mul(&d[0]));
    r.to_polyzeta().expect("polynomial input gives a polynomial")
}
