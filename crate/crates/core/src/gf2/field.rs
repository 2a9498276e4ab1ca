//! GF(2^64) arithmetic modulo `x^64 + x^4 + x^3 + x + 1`.
//!
//! Elements are bit vectors of polynomial coefficients (bit `i` is the
//! coefficient of `x^i`). Addition is XOR; multiplication is a carry-less
//! product followed by reduction. On x86_64 the carry-less product uses
//! `pclmulqdq` when the CPU has it.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

/// Low 64 bits of the reduction polynomial (`x^4 + x^3 + x + 1`).
pub const REDUCTION_LOW: u64 = 0x1b;

/// Human-readable name of the reduction polynomial.
pub const REDUCTION_POLYNOMIAL: &str = "x^64 + x^4 + x^3 + x + 1";

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
#[repr(transparent)]
pub struct Gf64(pub u64);

impl Gf64 {
    pub const ZERO: Gf64 = Gf64(0);
    pub const ONE: Gf64 = Gf64(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Gf64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf64({:#018x})", self.0)
    }
}

impl fmt::Display for Gf64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#018x}", self.0)
    }
}

impl Add for Gf64 {
    type Output = Gf64;
    #[inline]
    fn add(self, rhs: Gf64) -> Gf64 {
        Gf64(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf64 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf64) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf64 {
    type Output = Gf64;
    #[inline]
    fn mul(self, rhs: Gf64) -> Gf64 {
        Gf64(gf_mul(self.0, rhs.0))
    }
}

impl MulAssign for Gf64 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf64) {
        *self = *self * rhs;
    }
}

/// Folds a 128-bit carry-less product `hi * x^64 + lo` back into 64 bits.
#[inline(always)]
pub(crate) fn reduce(hi: u64, lo: u64) -> u64 {
    // x^64 = x^4 + x^3 + x + 1; the shifted-out top bits of `hi` fold once more.
    let spill = (hi >> 63) ^ (hi >> 61) ^ (hi >> 60);
    let folded = hi ^ spill;
    lo ^ folded ^ (folded << 1) ^ (folded << 3) ^ (folded << 4)
}

/// Portable 64x64 -> 128 carry-less product.
#[inline]
pub(crate) fn clmul_portable(a: u64, b: u64) -> (u64, u64) {
    let a = a as u128;
    let mut acc = 0u128;
    for i in 0..64 {
        let mask = 0u128.wrapping_sub(((b >> i) & 1) as u128);
        acc ^= (a << i) & mask;
    }
    ((acc >> 64) as u64, acc as u64)
}

#[inline]
fn mul_portable(a: u64, b: u64) -> u64 {
    let (hi, lo) = clmul_portable(a, b);
    reduce(hi, lo)
}

#[cfg(target_arch = "x86_64")]
mod hw {
    use std::arch::x86_64::*;

    #[inline]
    #[target_feature(enable = "pclmulqdq,sse2")]
    pub(super) unsafe fn mul(a: u64, b: u64) -> u64 {
        let p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(a as i64), _mm_cvtsi64_si128(b as i64), 0);
        let lo = _mm_cvtsi128_si64(p) as u64;
        let hi = _mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)) as u64;
        super::reduce(hi, lo)
    }

    #[target_feature(enable = "pclmulqdq,sse2")]
    pub(super) unsafe fn scale(dst: &mut [u64], src: &[u64], w: u64) {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = mul(s, w);
        }
    }

    #[target_feature(enable = "pclmulqdq,sse2")]
    pub(super) unsafe fn scale_in_place(v: &mut [u64], w: u64) {
        for d in v.iter_mut() {
            *d = mul(*d, w);
        }
    }

    #[target_feature(enable = "pclmulqdq,sse2")]
    pub(super) unsafe fn scale_add(dst: &mut [u64], src: &[u64], w: u64) {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d ^= mul(s, w);
        }
    }
}

#[inline]
fn has_clmul() -> bool {
    #[cfg(target_arch = "x86_64")]
    {
        std::is_x86_feature_detected!("pclmulqdq")
    }
    #[cfg(not(target_arch = "x86_64"))]
    {
        false
    }
}

/// Field product of two raw elements.
#[inline]
pub fn gf_mul(a: u64, b: u64) -> u64 {
    #[cfg(target_arch = "x86_64")]
    if has_clmul() {
        // SAFETY: the CPU feature was detected at runtime.
        return unsafe { hw::mul(a, b) };
    }
    mul_portable(a, b)
}

/// `dst[i] = w * src[i]`.
pub(crate) fn scale_slice(dst: &mut [u64], src: &[u64], w: u64) {
    debug_assert_eq!(dst.len(), src.len());
    #[cfg(target_arch = "x86_64")]
    if has_clmul() {
        // SAFETY: the CPU feature was detected at runtime.
        unsafe { hw::scale(dst, src, w) };
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = mul_portable(s, w);
    }
}

/// `v[i] = w * v[i]`.
pub(crate) fn scale_in_place(v: &mut [u64], w: u64) {
    #[cfg(target_arch = "x86_64")]
    if has_clmul() {
        // SAFETY: the CPU feature was detected at runtime.
        unsafe { hw::scale_in_place(v, w) };
        return;
    }
    for d in v.iter_mut() {
        *d = mul_portable(*d, w);
    }
}

/// `dst[i] += w * src[i]`.
pub(crate) fn scale_add_slice(dst: &mut [u64], src: &[u64], w: u64) {
    debug_assert_eq!(dst.len(), src.len());
    #[cfg(target_arch = "x86_64")]
    if has_clmul() {
        // SAFETY: the CPU feature was detected at runtime.
        unsafe { hw::scale_add(dst, src, w) };
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d ^= mul_portable(s, w);
    }
}
