//! Radical expressions, Chebyshev inversion and closed-form solvers up to degree four.

pub mod chebyshev;
pub mod expr;
pub mod pencil;
pub mod solve;

pub use chebyshev::{chebyshev, chebyshev_eval, chebyshev_preimages, invert_chebyshev, invert_power, power_preimages};
pub use expr::{Branches, MultiValue, Node, RadicalExpr, Tracked};
pub use pencil::{build_pencil, solve_quartic_pencil, solve_quartic_pencil_at, split_singular_conic, Conic, Line};
pub use solve::{solve_cubic, solve_cubic_at, solve_equation};
