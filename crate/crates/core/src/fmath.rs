//! Float functions that work without `std`.

use num_traits::Float;

#[inline]
pub fn sqrt(x: f64) -> f64 {
    Float::sqrt(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    Float::cos(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    Float::sin(x)
}

#[inline]
pub fn acos(x: f64) -> f64 {
    Float::acos(x)
}

#[inline]
pub fn mul_add(a: f64, b: f64, c: f64) -> f64 {
    Float::mul_add(a, b, c)
}

#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    Float::powi(x, n)
}
