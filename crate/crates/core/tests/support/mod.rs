pub mod khovanov;
pub mod matrices;
