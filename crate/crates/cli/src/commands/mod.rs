pub mod asymptotics;
pub mod count;
pub mod series;
pub mod verify;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}
