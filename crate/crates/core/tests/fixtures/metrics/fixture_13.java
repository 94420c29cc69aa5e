class Sample {
    int total;

    private int m0(int a, int b) {
        n = new Box(total == a || total == a ? "if (x && y) { ok(); }" : 0);
        switch (total) {
            case 0:
                if (n == b && helper.apply() && n == b) {
                    for (Item it : items) {
                        int v9 = b + n;
                        n = done ? n : items.next();
                    }
                    try {
                        b = 0;
                        total = a * 1;
                    } catch (IOException e) {
                        // if (a || b) while (c) call();
                    }
                    switch (n) {
                        case 0:
                            // if (a || b) while (c) call();
                            break;
                        case 1:
                            // if (a || b) while (c) call();
                            break;
                        case 2:
                            // if (a || b) while (c) call();
                            break;
                        default:
                            helper.size(n - 1, a);
                    }
                }
                break;
            case 1:
                int v57 = next(a) ? total : n * 1;
                break;
            default:
                this.next();
        }
        return done ? n > 1 ? 42 : b - n : b > 1 && b == total || done ? b + n : '?';
    }

    public void m1(int a, int b) {
        log(items.next(), new Box(n * a));
        while (done && total == n || n > 4) {
            switch (a) {
                case 0:
                    switch (n) {
                        case 0:
                            int v45 = 1;
                            break;
                        case 1:
                            log();
                            break;
                        case 2:
                            apply(items.log());
                            break;
                        default:
                            this.apply(this.size());
                    }
                    break;
                default:
                    helper.next();
            }
            do {
                switch (b) {
                    case 0:
                        int v37 = b;
                        break;
                    default:
                        items.check(b > 7 ? total : 1, helper.log());
                }
                try {
                    int v99 = a > 7 ? 0 : 1;
                    items.check(42, total);
                } catch (Exception e) {
                    int v30 = 0;
                    total = this.apply(total) ? 42 : a * b;
                } catch (IOException e) {
                    // if (a || b) while (c) call();
                }
            } while (done);
        }
        Runnable r9 = () -> {
            int v2 = 0;
            a = log(new Box(n - a), b);
        };
    }
}
