pub mod checks;
pub mod exactnum;
pub mod jacobi;
pub mod sampling;
pub mod space;
pub mod tensor;
pub mod verify;
