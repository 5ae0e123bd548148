//! Scalar abstraction: the numeric element type of tensors.
//!
//! Everything below the model layer is generic over [`Scalar`] so the same
//! kernels run in f32 (the pipeline default) or f64 (used by tests that want
//! a higher-precision reference path). Matrix products dispatch to the
//! matrixmultiply kernels per type.

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use std::fmt::{Debug, Display};

pub trait Scalar:
    Float + NumAssign + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// C <- alpha * A(m,k) * B(k,n) + beta * C(m,n), all row-major contiguous.
    fn gemm(m: usize, k: usize, n: usize, alpha: Self, a: &[Self], b: &[Self], beta: Self, c: &mut [Self]);

    /// Lossless-enough conversion from f64 literals and hyper-parameters.
    fn from_f64_c(v: f64) -> Self {
        Self::from_f64(v).expect("f64 conversion")
    }
}

impl Scalar for f32 {
    fn gemm(m: usize, k: usize, n: usize, alpha: f32, a: &[f32], b: &[f32], beta: f32, c: &mut [f32]) {
        debug_assert_eq!(a.len(), m * k);
        debug_assert_eq!(b.len(), k * n);
        debug_assert_eq!(c.len(), m * n);
        unsafe {
            matrixmultiply::sgemm(
                m, k, n, alpha,
                a.as_ptr(), k as isize, 1,
                b.as_ptr(), n as isize, 1,
                beta,
                c.as_mut_ptr(), n as isize, 1,
            );
        }
    }
}

impl Scalar for f64 {
    fn gemm(m: usize, k: usize, n: usize, alpha: f64, a: &[f64], b: &[f64], beta: f64, c: &mut [f64]) {
        debug_assert_eq!(a.len(), m * k);
        debug_assert_eq!(b.len(), k * n);
        debug_assert_eq!(c.len(), m * n);
        unsafe {
            matrixmultiply::dgemm(
                m, k, n, alpha,
                a.as_ptr(), k as isize, 1,
                b.as_ptr(), n as isize, 1,
                beta,
                c.as_mut_ptr(), n as isize, 1,
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gemm_small_identity() {
        // [1 2; 3 4] * I
        let a = [1.0f32, 2.0, 3.0, 4.0];
        let eye = [1.0f32, 0.0, 0.0, 1.0];
        let mut c = [0.0f32; 4];
        f32::gemm(2, 2, 2, 1.0, &a, &eye, 0.0, &mut c);
        assert_eq!(c, a);
    }

    #[test]
    fn gemm_f64_known_product() {
        // [1 2 3] * [1;1;1] = [6]
        let a = [1.0f64, 2.0, 3.0];
        let b = [1.0f64, 1.0, 1.0];
        let mut c = [0.0f64];
        f64::gemm(1, 3, 1, 1.0, &a, &b, 0.0, &mut c);
        assert_eq!(c[0], 6.0);
    }
}
