//! Dense polynomials with exact rational coefficients.
//!
//! [`UniPoly`] stores coefficients lowest exponent first and is kept in
//! canonical form (no trailing zeros), so `==` is mathematical equality.
//! [`BiPoly`] is x-major: a polynomial in `x` whose coefficients are
//! [`UniPoly`]s in the parameter `t`.

mod bi;
pub(crate) mod int;
mod render;
mod uni;

pub use bi::BiPoly;
pub use render::TermOrder;
pub use uni::UniPoly;

/// Implements `op(&a, &b)` plus the three owned/borrowed forwarding variants.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident, $imp:path) => {
        impl<'a, 'b> std::ops::$tr<&'b $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'b $ty) -> $ty {
                $imp(self, rhs)
            }
        }
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $imp(&self, &rhs)
            }
        }
        impl<'b> std::ops::$tr<&'b $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'b $ty) -> $ty {
                $imp(&self, rhs)
            }
        }
        impl<'a> std::ops::$tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $imp(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;
