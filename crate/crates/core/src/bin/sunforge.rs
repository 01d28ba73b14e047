fn main() {
    sunforge::cli::main()
}
