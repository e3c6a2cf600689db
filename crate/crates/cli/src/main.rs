fn main() {
    std::process::exit(pilat_cli::main_with_std());
}
