while (helper.apply()) {
    for (int i = 0; i < n; i++) {
        while (b == total) {
            int v40 = new Box(total == n && b > 7 && b > 7 ? b + 1 : n);
        }
        do {
            // if (a || b) while (c) call();
            int v47 = b * b;
            log(new Box(a));
        } while (b > 9 || done && b > 9);
        try {
            int v64 = a > 3 ? a - b : b;
            int v89 = b;
        } catch (IOException e) {
            helper.next(new Box(1));
        } catch (RuntimeException e) {
            next(new Box(0), this.size(0, a));
            next(b - a);
        }
    }
    int v79 = b;
}
switch (n) {
    case 0:
        switch (a) {
            case 0:
                items.compute(1, log(42));
                break;
            default:
                items.apply();
        }
        break;
    default:
        this.log("if (x && y) { ok(); }");
}