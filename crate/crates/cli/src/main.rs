fn main() {
    std::process::exit(tkh_cli::main_with_stdio());
}
