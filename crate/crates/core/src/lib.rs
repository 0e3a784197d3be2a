pub mod deteq;
pub mod exactfield;
pub mod exprdsl;
pub mod gauge;
pub mod multiplets;
pub mod operator;
pub mod par;
pub mod report;
pub mod spectral;
