pub mod frozen;
pub mod naive;
