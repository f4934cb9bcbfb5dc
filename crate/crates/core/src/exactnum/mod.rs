//! Exact scalars: rationals, the fifth cyclotomic field, and Laurent
//! combinations in λ^{1/2} and Λ = λ⁵.

mod cyc;
mod laurent;
mod lpoly;
mod rational;
mod ring;

pub use cyc::CycScalar;
pub use laurent::LambdaLaurent;
pub use lpoly::LambdaPoly;
pub use rational::Rational;
pub use ring::Ring;

/// Shorthand for `Rational::new`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// ξ^k as an element of Q(ξ).
pub fn xi(k: i64) -> CycScalar {
    CycScalar::xi_pow(k)
}

/// ξ^{n/2} under the convention ξ^{1/2} = ξ³.
pub fn zeta_half_power(n: i64) -> CycScalar {
    CycScalar::zeta_half_power(n)
}
