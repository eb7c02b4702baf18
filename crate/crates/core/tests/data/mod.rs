pub mod ml_reference;
