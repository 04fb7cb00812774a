fn main() {
    std::process::exit(divtorus::cli::main_with_env());
}
