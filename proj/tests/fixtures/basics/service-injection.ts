@Injectable({ providedIn: 'root' })
export class UserService {
    getName(): string {
        return 'Bob';
    }
}

@Component({
    selector: 'app-user',
    template: '{{ user }}'
})
export class UserComponent {
    name: string;

    constructor(private userService: UserService) {
        this.name = this.userService.getName();
    }
}
