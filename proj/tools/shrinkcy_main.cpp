// placeholder until the report module lands
int main() { return 4; }
