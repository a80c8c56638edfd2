pub mod composition;
pub mod hecke;
pub mod linalg;
pub mod modrep;
pub mod permutation;
pub mod qsym;
pub mod tableau;
pub mod verify;
