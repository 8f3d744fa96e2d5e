pub mod coeffs;
pub mod exact;
pub mod families;
pub mod lambert;
mod ser;
