//! The weight polynomials `G`, `Q`, `R` and the half-period values `xi_j`.

use std::sync::OnceLock;

use ev_core::{parse_mpoly, MPolyX, RatZeta};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    G,
    Q,
    R,
}

const G_TEXT: &str = "(z + 2)*x1*x2*(x1 + x2) - z*(x1^2 + x2^2) - 2*(z^2 + 3*z + 1)*x1*x2 \
                      + z*(2*z + 1)*(x1 + x2)";
const Q_TEXT: &str = "x2*(x2 - 2*z - 1)*((z + 2)*x2 - 3*z) - x1*((z + 2)*x2 - z)*(2*z + 1 - 3*x2)";
const R_TEXT: &str = "3*(z + 2)^2*x1^2*x2^2 + z*(z + 2)*(2*z + 1)*(x1^2 + x2^2) \
                      - 2*(z^2 + 4*z + 1)*((z + 2)*x1*x2 + z*(2*z + 1))*(x1 + x2) \
                      + 4*(z^4 + 4*z^3 + 8*z^2 + 4*z + 1)*x1*x2 + 3*z^2*(2*z + 1)^2";

/// The weight as a polynomial in two variables `x1`, `x2`.
pub fn weight_poly(which: Weight) -> &'static MPolyX {
    static CELLS: [OnceLock<MPolyX>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let (i, text) = match which {
        Weight::G => (0, G_TEXT),
        Weight::Q => (1, Q_TEXT),
        Weight::R => (2, R_TEXT),
    };
    CELLS[i].get_or_init(|| parse_mpoly(text, Some(2)).expect("weight polynomial parses"))
}

/// `W(a, b)` for polynomial arguments living in a common ring.
pub fn weight(which: Weight, a: &MPolyX, b: &MPolyX) -> MPolyX {
    compose2(weight_poly(which), a, b)
}

/// `W(a, b)` at two elements of `Q(z)`.
pub fn weight_at(which: Weight, a: &RatZeta, b: &RatZeta) -> RatZeta {
    weight_poly(which).eval(&[a.clone(), b.clone()])
}

/// Substitutes `x1 -> a`, `x2 -> b` in a two-variable polynomial.
pub fn compose2(p: &MPolyX, a: &MPolyX, b: &MPolyX) -> MPolyX {
    compose(p, &[a.clone(), b.clone()])
}

/// Substitutes `x_i -> args[i]` for all variables of `p`.
pub fn compose(p: &MPolyX, args: &[MPolyX]) -> MPolyX {
    assert_eq!(p.nvars(), args.len());
    let n = args.first().map(|a| a.nvars()).unwrap_or(0);
    let pws: Vec<Vec<MPolyX>> = args
        .iter()
        .enumerate()
        .map(|(i, a)| powers(a, p.degree_in(i).unwrap_or(0) as usize))
        .collect();
    let mut acc = MPolyX::zero(n);
    for (m, c) in p.terms() {
        let t = m
            .exps()
            .iter()
            .enumerate()
            .fold(MPolyX::constant(n, c.clone()), |t, (i, &e)| {
                if e == 0 {
                    t
                } else {
                    t.mul(&pws[i][e as usize])
                }
            });
        acc = acc.add(&t);
    }
    acc
}

fn powers(a: &MPolyX, d: usize) -> Vec<MPolyX> {
    let mut v = vec![MPolyX::one(a.nvars())];
    for i in 0..d {
        let next = v[i].mul(a);
        v.push(next);
    }
    v
}

/// Half-period values `(2z+1, z/(z+2), z(2z+1)/(z+2), 1)`.
pub fn xi() -> [RatZeta; 4] {
    let zp2 = RatZeta::linear(1, 2);
    let z = RatZeta::z();
    let tz1 = RatZeta::linear(2, 1);
    [
        tz1.clone(),
        z.div(&zp2).unwrap(),
        z.mul(&tz1).div(&zp2).unwrap(),
        RatZeta::one(),
    ]
}

/// `G(x, xi_i) = c (x - a)^d` with `d` in `{0, 2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GAtXi {
    pub c: RatZeta,
    pub root: RatZeta,
    pub mult: u32,
}

/// Factored form of `G(x, y)` as a polynomial in `x` for fixed `y`. For
/// every half-period the quadratic is a constant times a perfect square.
pub fn g_at_xi(i: usize) -> GAtXi {
    let y = &xi()[i];
    let g = weight_poly(Weight::G);
    let x = MPolyX::var(1, 0);
    let gy = compose2(g, &x, &MPolyX::constant(1, y.clone()));
    let c2 = gy.coeff(&[2]);
    let c1 = gy.coeff(&[1]);
    let c0 = gy.coeff(&[0]);
    if c2.is_zero() {
        assert!(c1.is_zero(), "G(x, xi) is not of the expected shape");
        return GAtXi {
            c: c0,
            root: RatZeta::zero(),
            mult: 0,
        };
    }
    let root = c1.neg().div(&c2.scale(&ev_core::rat(2))).unwrap();
    let disc = c1.mul(&c1).sub(&c2.mul(&c0).scale(&ev_core::rat(4)));
    assert!(disc.is_zero(), "G(x, xi) is not a perfect square");
    GAtXi {
        c: c2,
        root,
        mult: 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ev_core::parse_ratzeta;

    fn x2() -> (MPolyX, MPolyX) {
        (MPolyX::var(2, 0), MPolyX::var(2, 1))
    }

    #[test]
    fn symmetry_of_g_and_r() {
        let (a, b) = x2();
        for w in [Weight::G, Weight::R] {
            assert_eq!(weight(w, &a, &b), weight(w, &b, &a));
        }
        assert_ne!(weight(Weight::Q, &a, &b), weight(Weight::Q, &b, &a));
    }

    #[test]
    fn g_vanishes_at_origin() {
        assert!(weight_at(Weight::G, &RatZeta::zero(), &RatZeta::zero()).is_zero());
    }

    #[test]
    fn g_on_half_periods() {
        let expect = [
            ("2*(z + 1)^2", "0", 2),
            ("2*z^2*(z + 1)^2 / (z + 2)^2", "0", 0),
            ("2*z^2", "(2*z + 1)/(z + 2)", 2),
            ("2", "z", 2),
        ];
        for (i, (c, r, d)) in expect.iter().enumerate() {
            let f = g_at_xi(i);
            assert_eq!(f.mult, *d);
            assert_eq!(f.c, parse_ratzeta(c).unwrap());
            if *d > 0 {
                assert_eq!(f.root, parse_ratzeta(r).unwrap());
            }
        }
    }

    #[test]
    fn g_xi0_xi1_by_substitution() {
        let xi = xi();
        let direct = weight_at(Weight::G, &xi[0], &xi[1]);
        // G(x, xi_1) is constant in x
        assert_eq!(direct, g_at_xi(1).c);
    }
}
