//! The sequence `Y_k` with `Y_{k+1} Y_{k-1} = 2(2k+1) Y_k^2`, `Y_0 = Y_1 = 1`.

use ev_core::Rat;
use num_bigint::BigInt;
use num_traits::One;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `prod_{j=1}^{k} (2j-1)! / (j-1)!`
fn product(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * factorial(2 * j - 1) / factorial(j - 1))
}

/// Closed form of `Y_k` for all integers `k`.
pub fn yseq(k: i64) -> Rat {
    if k >= 0 {
        return Rat::from_integer(product(k as u64));
    }
    let sign_exp = (k * (k + 1) / 2).rem_euclid(2);
    // 1 / 2^{2k+1} with 2k+1 < 0
    let v = Rat::from_integer(product((-k - 1) as u64) << (-(2 * k + 1)) as usize);
    if sign_exp == 1 {
        -v
    } else {
        v
    }
}

/// `Y_k` by running the recursion outward from `Y_0 = Y_1 = 1`.
pub fn yseq_recursive(k: i64) -> Rat {
    let (mut a, mut b) = (Rat::one(), Rat::one()); // Y_0, Y_1
    if k >= 1 {
        for j in 1..k {
            let next = Rat::from_integer((2 * (2 * j + 1)).into()) * &b * &b / &a;
            a = b;
            b = next;
        }
        b
    } else {
        // Y_{j-1} = 2(2j+1) Y_j^2 / Y_{j+1}
        for j in (k + 1..=0).rev() {
            let prev = Rat::from_integer((2 * (2 * j + 1)).into()) * &a * &a / &b;
            b = a;
            a = prev;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ev_core::rat;

    #[test]
    fn initial_values() {
        assert_eq!(yseq(0), rat(1));
        assert_eq!(yseq(1), rat(1));
        assert_eq!(yseq(2), rat(6));
        assert_eq!(yseq(-1), rat(2));
    }

    #[test]
    fn closed_form_matches_recursion() {
        for k in -8..=8 {
            assert_eq!(yseq(k), yseq_recursive(k), "k = {k}");
        }
        assert_eq!(yseq(-2), rat(-8));
    }
}
