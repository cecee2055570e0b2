fn main() {
    std::process::exit(lisa_kit::cli::run());
}
