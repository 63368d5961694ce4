fn main() {
    std::process::exit(cy3::cli::run_from_env());
}
