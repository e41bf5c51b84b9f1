pub mod cache;
pub mod chevalley;
pub mod classify;
pub mod dirac;
pub mod error;
pub mod linalg;
pub mod moduli;
pub mod nilpotent;
pub mod rootsys;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use rootsys::{CartanType, Coroot, RootSubset, RootSystem, Series};
pub use scalar::{Field, Gaussian, Rational};
pub use chevalley::{CartanPart, ChevalleyAlgebra, Conjugation, ConjugationKind, Element, LieAlgebra, Subalgebra};
pub use dirac::{DiracPair, LinearDirac, StructureClass, TwoForm};
pub use classify::{ClassifyRow, CompactFamily, CoverCheck, GcReport, GcSubsetDecomposition, RealFamily};
pub use moduli::{ModuliGraph, OrbitNode, ProjPoint};
pub use nilpotent::{NilpotentGcParams, Partition, ProbeReport, SlN, StandardTriple};
pub use cache::ConstantCache;
