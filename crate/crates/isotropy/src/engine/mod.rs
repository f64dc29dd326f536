pub mod cayley;
pub mod dimension;
pub mod forms;
pub mod generators;
pub mod model;
pub mod sampling;
pub mod solver;

pub use cayley::{cayley_automorphism, random_automorphism, real_admissibility, reflection, signature};
pub use dimension::{centralizer_dimension, nilpotent_dimension_variants, nonzero_dimension, parameter_count};
pub use forms::{coefficient_parity, AlternatingFormPair, FreeParameterSet};
pub use generators::{
    catalan_coefficient, catalan_recursive, diagonal_unipotent, generator_diagonal_unipotent,
    generator_offdiagonal, offdiagonal_unipotent, target_forms, Parity,
};
pub use model::{assemble_mixed, build_centralizer, build_centralizer_nilpotent, build_centralizer_nonzero, build_mixed, CentralizerModel};
pub use solver::{solve_structured_congruence, solve_with_state, CongruenceSolverState};
