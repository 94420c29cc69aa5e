public constructor TestCase(String name) or TestCase()
