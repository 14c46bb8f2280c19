//! Special functions for the AdS₂ Dirac problem: gamma and digamma,
//! the Gauss hypergeometric function with its connection formula about
//! x = 1, Jacobi and Chebyshev polynomials, and Ferrers functions of both
//! kinds at integer order.

pub mod error;
pub mod ferrers;
pub mod gamma;
pub mod hyp;
pub mod jacobi;

pub use error::{Result, SpecError};
pub use ferrers::{ferrers_p, ferrers_p_c, ferrers_pq_c, ferrers_q, ferrers_q_c};
pub use gamma::{
    cospi, cospi_c, digamma, digamma_c, gamma, gamma_c, gamma_ln, ln_gamma_c, rgamma, rgamma_c, sinpi, sinpi_c,
    EULER_GAMMA,
};
pub use hyp::{
    hyp2f1, hyp2f1_c, hyp2f1_connected, hyp2f1_connected_c, hyp2f1_series_c, hyp2f1_split_c, HypergeometricParams,
};
pub use jacobi::{chebyshev_t, chebyshev_u, jacobi_deriv_eval, jacobi_eval, jacobi_p, jacobi_p_deriv};
