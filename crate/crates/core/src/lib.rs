pub mod chevalley;
pub mod cli;
pub mod groups;
pub mod matrix;
pub mod rings;
pub mod roots;
pub mod twist;
pub mod verifiers;
