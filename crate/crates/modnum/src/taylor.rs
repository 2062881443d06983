//! Taylor coefficients from trapezoidal Cauchy integrals, and truncated
//! power series arithmetic.

use rug::Float;

use crate::hpc::Hpc;
use crate::modular::e2pi;
use crate::ModError;

#[derive(Debug, Clone)]
pub struct TaylorOptions {
    /// first node count; doubled until two successive counts agree
    pub start_nodes: usize,
    pub max_nodes: usize,
    /// required relative agreement between successive node counts
    pub tol: f64,
}

impl TaylorOptions {
    /// Defaults for a target relative accuracy.
    pub fn with_tol(tol: f64) -> Self {
        TaylorOptions {
            start_nodes: 32,
            max_nodes: 1024,
            tol,
        }
    }
}

/// A truncated power series `sum_k c_k h^k`.
#[derive(Debug, Clone)]
pub struct Series {
    pub c: Vec<Hpc>,
}

impl Series {
    pub fn constant(v: Hpc, len: usize) -> Self {
        let prec = v.prec();
        let mut c = vec![Hpc::zero(prec); len.max(1)];
        c[0] = v;
        Series { c }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    fn prec(&self) -> u32 {
        self.c[0].prec()
    }

    pub fn truncate(&self, len: usize) -> Series {
        Series {
            c: self.c[..len.min(self.len())].to_vec(),
        }
    }

    pub fn add(&self, o: &Series) -> Series {
        let n = self.len().min(o.len());
        Series {
            c: (0..n).map(|k| &self.c[k] + &o.c[k]).collect(),
        }
    }

    pub fn sub(&self, o: &Series) -> Series {
        let n = self.len().min(o.len());
        Series {
            c: (0..n).map(|k| &self.c[k] - &o.c[k]).collect(),
        }
    }

    pub fn scale(&self, s: &Hpc) -> Series {
        Series {
            c: self.c.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, o: &Series) -> Series {
        let n = self.len().min(o.len());
        let prec = self.prec();
        let c = (0..n)
            .map(|k| {
                (0..=k).fold(Hpc::zero(prec), |acc, i| acc + &self.c[i] * &o.c[k - i])
            })
            .collect();
        Series { c }
    }

    pub fn recip(&self) -> Result<Series, ModError> {
        let prec = self.prec();
        if self.c[0].abs() < crate::theta::eps(prec) {
            return Err(ModError::NearSingularSample("series with vanishing constant term".into()));
        }
        let inv0 = self.c[0].recip();
        let mut out: Vec<Hpc> = vec![inv0.clone()];
        for k in 1..self.len() {
            let s = (1..=k).fold(Hpc::zero(prec), |acc, i| acc + &self.c[i] * &out[k - i]);
            out.push(-(&s * &inv0));
        }
        Ok(Series { c: out })
    }

    pub fn div(&self, o: &Series) -> Result<Series, ModError> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn derivative(&self) -> Series {
        let prec = self.prec();
        let c: Vec<Hpc> = (1..self.len())
            .map(|k| self.c[k].scale(&Float::with_val(prec, k)))
            .collect();
        if c.is_empty() {
            return Series::constant(Hpc::zero(prec), 1);
        }
        Series { c }
    }

    /// `g * f'`
    pub fn derive_with(&self, g: &Series) -> Series {
        g.mul(&self.derivative())
    }

    pub fn value(&self) -> &Hpc {
        &self.c[0]
    }
}

/// Taylor coefficients `c_0..c_order` of `f` at `center`, from samples on
/// the circle of the given radius, with the relative error estimate
/// `max_k |c_k(N) - c_k(N/2)| r^k / max |f|`.
pub fn taylor_coeffs<F>(
    f: F,
    center: &Hpc,
    radius: &Float,
    order: usize,
    opts: &TaylorOptions,
) -> Result<(Series, f64), ModError>
where
    F: Fn(&Hpc) -> Result<Hpc, ModError>,
{
    let prec = center.prec();
    let node = |k: usize, n: usize| -> Hpc {
        let frac = Hpc::from_f64(prec, k as f64, 0.0) / Hpc::from_int(prec, n as i64);
        e2pi(&frac, 1)
    };
    let r = Hpc::real(Float::with_val(prec, radius));
    let mut n = opts.start_nodes.max(2 * (order + 1));
    let mut values: Vec<Hpc> = Vec::with_capacity(n);
    for k in 0..n {
        values.push(f(&(center + &(&r * &node(k, n))))?);
    }
    let coeffs = |vals: &[Hpc]| -> Vec<Hpc> {
        let m = vals.len();
        (0..=order)
            .map(|j| {
                let s = vals
                    .iter()
                    .enumerate()
                    .fold(Hpc::zero(prec), |acc, (k, v)| acc + v * &node((k * j) % m, m).conj());
                s / Hpc::from_int(prec, m as i64)
            })
            .collect()
    };
    let mut prev = coeffs(&values);
    let mut last = f64::INFINITY;
    loop {
        let next_n = 2 * n;
        if next_n > opts.max_nodes {
            break;
        }
        let mut fresh = Vec::with_capacity(next_n);
        for k in 0..next_n {
            if k % 2 == 0 {
                fresh.push(values[k / 2].clone());
            } else {
                fresh.push(f(&(center + &(&r * &node(k, next_n))))?);
            }
        }
        let cur = coeffs(&fresh);
        let scale = fresh
            .iter()
            .map(|v| v.abs())
            .max_by(|a, b| a.partial_cmp(b).expect("finite"))
            .expect("nonempty");
        let mut err = Float::new(prec);
        let mut rk = Float::with_val(prec, 1);
        for j in 0..=order {
            let d = Float::with_val(prec, (&cur[j] - &prev[j]).abs() * &rk);
            if d > err {
                err = d;
            }
            rk *= radius;
        }
        let err = if scale.is_zero() { 0.0 } else { (err / scale).to_f64() };
        values = fresh;
        n = next_n;
        prev = cur;
        if err < opts.tol {
            return Ok((rescale(prev, radius), err));
        }
        last = err;
    }
    Err(ModError::PrecisionExhausted {
        bound: last,
        tol: opts.tol,
    })
}

/// Converts circle coefficients `c_k r^k` into `c_k`.
fn rescale(c: Vec<Hpc>, radius: &Float) -> Series {
    let prec = radius.prec();
    let mut out = Vec::with_capacity(c.len());
    let mut rk = Float::with_val(prec, 1);
    for v in c {
        out.push(v.scale(&(Float::with_val(prec, 1) / &rk)));
        rk *= radius;
    }
    Series { c: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpc::prec_for;

    #[test]
    fn exponential_coefficients() {
        let prec = prec_for(50);
        let c = Hpc::from_f64(prec, 0.2, 0.1);
        let r = Float::with_val(prec, 0.25);
        let (s, err) =
            taylor_coeffs(|z| Ok(z.exp()), &c, &r, 4, &TaylorOptions::with_tol(1e-45)).unwrap();
        assert!(err < 1e-45);
        let e = c.exp();
        let mut fact = Float::with_val(prec, 1);
        for k in 0..=4u32 {
            if k > 0 {
                fact *= k;
            }
            let expect = e.scale(&(Float::with_val(prec, 1) / &fact));
            assert!(s.c[k as usize].rel_diff(&expect) < 1e-40, "{k}");
        }
    }

    #[test]
    fn series_arithmetic() {
        let prec = prec_for(40);
        let one = Hpc::one(prec);
        // 1 / (1 - h) = 1 + h + h^2 + ...
        let s = Series {
            c: vec![one.clone(), -one.clone(), Hpc::zero(prec), Hpc::zero(prec)],
        };
        let r = s.recip().unwrap();
        assert!(r.c.iter().all(|v| v.rel_diff(&one) < 1e-40));
        assert_eq!(r.derivative().len(), 3);
    }
}
