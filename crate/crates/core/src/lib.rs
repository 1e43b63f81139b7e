pub mod ffield;
pub mod legendre;
pub mod lucas;
pub mod pseries;
pub mod qforms;
pub mod verifier;
