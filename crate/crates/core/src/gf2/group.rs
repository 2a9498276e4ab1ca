//! The group algebra GF(2^64)[Z_2^r].
//!
//! An element is a vector of `2^r` field coefficients indexed by the group
//! element `g` written as an `r`-bit mask. Only the operations the run
//! circuit needs are provided: addition, scaling, and multiplication by a
//! single variable image `w * (e_0 + e_v)`.

use thiserror::Error;

use super::field::{scale_add_slice, scale_in_place, scale_slice, Gf64};

/// Largest supported group dimension.
pub const MAX_GROUP_DIM: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("group dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("group dimension {0} exceeds the supported maximum {MAX_GROUP_DIM}")]
    DimensionTooLarge(u32),
}

#[derive(Clone, PartialEq, Eq)]
pub struct GroupVec {
    dim: u32,
    coeffs: Vec<u64>,
}

impl std::fmt::Debug for GroupVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupVec")
            .field("dim", &self.dim)
            .field(
                "coeffs",
                &self.coeffs.iter().map(|&c| Gf64(c)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl GroupVec {
    pub fn zero(dim: u32) -> Result<Self, AlgebraError> {
        if dim > MAX_GROUP_DIM {
            return Err(AlgebraError::DimensionTooLarge(dim));
        }
        Ok(GroupVec {
            dim,
            coeffs: vec![0; 1 << dim],
        })
    }

    /// The basis element `e_g` with coefficient 1.
    pub fn basis(dim: u32, g: usize) -> Result<Self, AlgebraError> {
        let mut v = Self::zero(dim)?;
        v.coeffs[g] = 1;
        Ok(v)
    }

    pub fn from_coeffs(dim: u32, coeffs: Vec<Gf64>) -> Result<Self, AlgebraError> {
        if dim > MAX_GROUP_DIM {
            return Err(AlgebraError::DimensionTooLarge(dim));
        }
        assert_eq!(coeffs.len(), 1 << dim, "coefficient count must be 2^dim");
        Ok(GroupVec {
            dim,
            coeffs: coeffs.into_iter().map(|c| c.0).collect(),
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn coeff(&self, g: usize) -> Gf64 {
        Gf64(self.coeffs[g])
    }

    pub fn coeffs(&self) -> impl Iterator<Item = Gf64> + '_ {
        self.coeffs.iter().map(|&c| Gf64(c))
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.coeffs)
    }

    pub fn add(&self, other: &GroupVec) -> Result<GroupVec, AlgebraError> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut out = self.clone();
        add_into(&mut out.coeffs, &other.coeffs);
        Ok(out)
    }

    /// `w * (e_0 + e_v) * self`.
    ///
    /// Panics if `v` is not a valid group element.
    pub fn mul_var(&self, v: usize, w: Gf64) -> GroupVec {
        assert!(v < self.coeffs.len(), "group element {v} out of range");
        let mut out = vec![0; self.coeffs.len()];
        mul_var_into(&mut out, &self.coeffs, v, w.0);
        GroupVec {
            dim: self.dim,
            coeffs: out,
        }
    }

    pub fn scale(&self, w: Gf64) -> GroupVec {
        let mut out = vec![0; self.coeffs.len()];
        scale_slice(&mut out, &self.coeffs, w.0);
        GroupVec {
            dim: self.dim,
            coeffs: out,
        }
    }
}

// Slice kernels shared with the circuit evaluator. All slices have length 2^r.

#[inline]
pub(crate) fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

#[inline]
pub(crate) fn add_into(dst: &mut [u64], src: &[u64]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// `dst += w * src`.
#[inline]
pub(crate) fn scale_add_into(dst: &mut [u64], src: &[u64], w: u64) {
    scale_add_slice(dst, src, w);
}

/// `dst = w * (e_0 + e_v) * src`, i.e. `dst[g] = w * (src[g] + src[g ^ v])`.
pub(crate) fn mul_var_into(dst: &mut [u64], src: &[u64], v: usize, w: u64) {
    debug_assert_eq!(dst.len(), src.len());
    debug_assert!(v < src.len());
    for (g, d) in dst.iter_mut().enumerate() {
        *d = src[g] ^ src[g ^ v];
    }
    scale_in_place(dst, w);
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vec(rng: &mut ChaCha8Rng, dim: u32) -> GroupVec {
        GroupVec::from_coeffs(dim, (0..1 << dim).map(|_| Gf64(rng.gen())).collect()).unwrap()
    }

    /// Group-algebra product by definition: (a*b)[g] = sum_{h} a[h] * b[g ^ h].
    fn convolve(a: &GroupVec, b: &GroupVec) -> GroupVec {
        let n = 1usize << a.dim();
        let mut out = vec![Gf64::ZERO; n];
        for h in 0..n {
            for g in 0..n {
                out[h ^ g] += a.coeff(h) * b.coeff(g);
            }
        }
        GroupVec::from_coeffs(a.dim(), out).unwrap()
    }

    fn var_image(dim: u32, v: usize, w: Gf64) -> GroupVec {
        let mut c = vec![Gf64::ZERO; 1 << dim];
        c[0] += w;
        c[v] += w;
        GroupVec::from_coeffs(dim, c).unwrap()
    }

    #[test]
    fn addition_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = random_vec(&mut rng, 3);
        let v = random_vec(&mut rng, 3);
        let zero = GroupVec::zero(3).unwrap();
        assert_eq!(u.add(&zero).unwrap(), u);
        assert!(u.add(&u).unwrap().is_zero());
        let s = u.add(&v).unwrap();
        assert_eq!(s, v.add(&u).unwrap());
        for g in 0..8 {
            assert_eq!(s.coeff(g).0, u.coeff(g).0 ^ v.coeff(g).0);
        }
        assert_eq!(
            u.add(&GroupVec::zero(2).unwrap()),
            Err(AlgebraError::DimensionMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn mul_var_small_cases() {
        let e0 = GroupVec::basis(3, 0).unwrap();
        assert!(e0.mul_var(0, Gf64::ONE).is_zero());
        let p = e0.mul_var(5, Gf64::ONE);
        for g in 0..8 {
            let want = if g == 0 || g == 5 {
                Gf64::ONE
            } else {
                Gf64::ZERO
            };
            assert_eq!(p.coeff(g), want);
        }
    }

    #[test]
    fn mul_var_matches_convolution() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for dim in 0..=3 {
            for _ in 0..100 {
                let u = random_vec(&mut rng, dim);
                let v = rng.gen_range(0..1usize << dim);
                let w = Gf64(rng.gen());
                assert_eq!(u.mul_var(v, w), convolve(&var_image(dim, v, w), &u));
            }
        }
    }

    #[test]
    fn squares_of_variables_vanish_by_convolution() {
        for dim in 0..=3u32 {
            for v in 0..1usize << dim {
                let x = var_image(dim, v, Gf64::ONE);
                assert!(convolve(&x, &x).is_zero(), "dim {dim} v {v}");
            }
        }
    }

    #[test]
    fn square_annihilation() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for dim in 1..=8u32 {
            for v in 0..1usize << dim {
                let u = random_vec(&mut rng, dim);
                let (w1, w2) = (Gf64(rng.gen()), Gf64(rng.gen()));
                assert!(u.mul_var(v, w1).mul_var(v, w2).is_zero());
            }
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn mul_var_rejects_foreign_element() {
        GroupVec::zero(2).unwrap().mul_var(4, Gf64::ONE);
    }

    #[test]
    fn dimension_cap() {
        assert_eq!(GroupVec::zero(25), Err(AlgebraError::DimensionTooLarge(25)));
    }
}
