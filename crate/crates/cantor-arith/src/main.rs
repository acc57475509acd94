fn main() {
    std::process::exit(cantor_arith::cli::run_from_env());
}
