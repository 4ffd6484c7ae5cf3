pub mod coxeter;
pub mod digraph;
pub mod exactalg;
pub mod families;
pub mod hecke;
pub mod modrep;
pub mod validator;
