//! Contractibility testing for small graphs: witness structures, suitable
//! pairs, 2-Disjoint Connected Subgraphs, cyclicity, and the hypergraph
//! 2-colouring gadgets that make P5 and C6 contraction hard on bipartite
//! graphs.

pub mod cli;
pub mod engine;
pub mod graph;
pub mod hypergraph;
pub mod reductions;
pub mod sweep;

pub use engine::{
    c3_contractible, contracts_to, cyclicity, find_suitable_pair, p4_contractible, solve_2dcs,
    verify_witness, Budget, EngineError, PatternSpec, SuitablePair, TwoDcsSolution,
    WitnessStructure, WitnessViolation,
};
pub use graph::{Bipartition, Diameter, Graph, GraphError};
pub use hypergraph::{Hypergraph, HypergraphError, TwoColouring};
pub use reductions::{
    build_c6_gadget, build_gadget, build_p5_gadget, build_p6_gadget, colouring_to_c6_witness,
    colouring_to_p5_witness, p5_witness_to_colouring, GadgetKind, LabeledGadget, ReductionError,
    RoleClass, VertexRole,
};
