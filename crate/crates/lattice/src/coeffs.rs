//! The coefficient polynomials `A^(k)` and `B^(k)` of the bilinear
//! recursions.

use std::sync::OnceLock;

use ev_core::{parse_ratzeta, PolyZeta, Rat};

/// Which coefficient block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coeff {
    A,
    B,
}

type Term = (PolyZeta, fn(&[i64; 4]) -> i64);

fn parse(s: &str) -> PolyZeta {
    parse_ratzeta(s)
        .ok()
        .and_then(|r| r.to_polyzeta())
        .expect("coefficient text is a polynomial")
}

fn build(terms: &[(&str, fn(&[i64; 4]) -> i64)]) -> Vec<Term> {
    terms.iter().map(|(s, f)| (parse(s), *f)).collect()
}

fn a_terms() -> &'static [Term] {
    static T: OnceLock<Vec<Term>> = OnceLock::new();
    T.get_or_init(|| {
        build(&[
            ("2*z^4 - 23*z^3 - 36*z^2 - 5*z + 8", |k| k[0] * k[0]),
            ("-z*(2*z + 1)*(3*z^2 + 10*z + 5)", |k| k[1] * (2 * k[0] + k[1])),
            ("-z*(6*z^3 + 19*z^2 + 4*z - 11)", |k| k[2] * k[2]),
            ("-z*(2*z + 1)*(3*z^2 + 2*z + 1)", |k| k[3] * k[3]),
            ("-2*z*(z - 1)*(2*z + 1)*(z + 3)", |k| (k[0] + k[1]) * k[2]),
            ("-2*(z - 1)*(2*z + 1)*(3*z^2 + 9*z + 4)", |k| (k[0] + k[1]) * k[3]),
            ("-2*(2*z + 1)*(z^3 + 6*z^2 + 3*z - 4)", |k| k[2] * k[3]),
            ("-4*(2*z + 1)*(z^2 + 5*z + 3)", |k| k[0] + k[1]),
            ("4*(2*z + 1)*(2*z^3 + 5*z^2 - z - 3)", |k| k[2]),
            ("4*(2*z + 1)*(z^2 + z + 1)", |k| k[3]),
            ("-4*(z + 1)^2*(2*z^2 - z + 2)", |_| 1),
        ])
    })
}

fn b_terms() -> &'static [Term] {
    static T: OnceLock<Vec<Term>> = OnceLock::new();
    T.get_or_init(|| {
        build(&[
            ("10*z^4 + 13*z^3 - 28*z^2 - 41*z - 8", |k| k[0] * k[0]),
            ("-z*(2*z + 1)*(3*z^2 + 10*z + 5)", |k| k[1] * (k[1] - 2 * k[0])),
            ("-z*(6*z^3 + 19*z^2 + 4*z - 11)", |k| k[2] * k[2]),
            ("-z*(2*z + 1)*(3*z^2 + 2*z + 1)", |k| k[3] * k[3]),
            ("2*z*(z - 1)*(2*z + 1)*(z + 3)", |k| (k[0] - k[1]) * k[2]),
            ("-2*(2*z + 1)*(z^3 + 6*z^2 + 3*z - 4)", |k| k[2] * k[3]),
            ("2*(z - 1)*(2*z + 1)*(3*z^2 + 9*z + 4)", |k| (k[0] - k[1]) * k[3]),
            ("2*(z - 1)*(2*z + 1)*(z + 3)*(3*z + 2)", |k| k[1] - k[0]),
            ("2*(2*z + 1)*(5*z^3 + 12*z^2 - 5*z - 6)", |k| k[2]),
            ("2*(2*z + 1)*(3*z^3 + 8*z^2 - 3*z - 2)", |k| k[3]),
            ("-2*(8*z^4 + 18*z^3 - 7*z^2 - 18*z - 4)", |_| 1),
        ])
    })
}

/// `A^(k)` or `B^(k)` as a polynomial in `z`.
pub fn rec_coeff(which: Coeff, k: [i64; 4]) -> PolyZeta {
    let terms = match which {
        Coeff::A => a_terms(),
        Coeff::B => b_terms(),
    };
    terms.iter().fold(PolyZeta::zero(), |acc, (p, f)| {
        acc.add(&p.scale(&Rat::from_integer(f(&k).into())))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_terms() {
        assert_eq!(
            rec_coeff(Coeff::A, [0; 4]),
            parse("-4*(z + 1)^2*(2*z^2 - z + 2)")
        );
        assert_eq!(
            rec_coeff(Coeff::B, [0; 4]),
            parse("-2*(8*z^4 + 18*z^3 - 7*z^2 - 18*z - 4)")
        );
    }

    #[test]
    fn generic_degree() {
        assert_eq!(rec_coeff(Coeff::A, [1, 2, -1, 1]).degree(), Some(4));
        assert_eq!(rec_coeff(Coeff::B, [1, 2, -1, 1]).degree(), Some(4));
    }
}
